use chowlam::chow::{chow_lam_parametric, recovery_ideal, Parametrization};
use chowlam::grassmann::GrassmannContext;
use chowlam::groebner::{
    hilbert_dim_degree, ideal_equal, ideal_intersection, saturate_irrelevant, saturation, Budget,
    Ideal,
};
use chowlam::poly::{parse_polynomial, Polynomial, RingRef};

fn positional(ideal: &Ideal, target: &RingRef) -> Ideal {
    let map: Vec<usize> = (0..ideal.ring().num_vars()).collect();
    Ideal::new(
        target,
        ideal
            .gens()
            .iter()
            .map(|g| g.map_variables(target, &map))
            .collect(),
    )
}

#[test]
fn explore_embedded_component_extraction() {
    let ctx = GrassmannContext::new(1, 4, 3).unwrap();
    let budget = Budget::default();
    let par =
        Parametrization::parse(&["s", "t"], &[vec!["s^5", "s^4*t", "s^3*t^2", "t^5"]]).unwrap();
    let result = chow_lam_parametric(&par, ctx, &budget).unwrap();
    let w_raw = recovery_ideal(&result).unwrap();
    let ring = w_raw.ring().clone();
    let w = saturate_irrelevant(&w_raw, &budget).unwrap();
    eprintln!(
        "W raw == W saturated: {}",
        ideal_equal(&w_raw, &w).unwrap()
    );
    let curve = {
        let vars = ["s", "t", "u", "x1", "x2", "x3", "x4"];
        let gens = ["x1 - u*s^5", "x2 - u*s^4*t", "x3 - u*s^3*t^2", "x4 - u*t^5"];
        let ideal = Ideal::parse(&vars, &gens).unwrap();
        positional(
            &chowlam::groebner::eliminate(&ideal, &["s", "t", "u"]).unwrap(),
            &ring,
        )
    };
    let displayed_reversed = positional(
        &Ideal::parse(
            &["x4", "x3", "x2", "x1"],
            &[
                "x4^2",
                "x3^3*x4",
                "x2*x3^2*x4",
                "x2^2*x3*x4",
                "x2^3*x4",
                "x3^4",
                "x2*x3^3",
                "x2^2*x3^2",
                "x2^3*x3 - x1*x3^2*x4",
                "x2^4 - x1*x3^3",
            ],
        )
        .unwrap(),
        &ring,
    );

    let p = |s: &str| parse_polynomial(s, &ring).unwrap();
    let m_ideal = Ideal::new(&ring, vec![p("q1"), p("q2"), p("q3")]);

    // does the displayed component recompose W?
    let meet = ideal_intersection(&curve, &displayed_reversed).unwrap();
    eprintln!(
        "I_V ∩ displayed(rev) == W_sat: {}, == W_raw: {}",
        ideal_equal(&meet, &w).unwrap(),
        ideal_equal(&meet, &w_raw).unwrap()
    );

    // top part: saturate W by the point
    let top = saturation(&w, &m_ideal).unwrap();
    eprintln!(
        "top == curve ideal: {}; top dim/deg {:?}",
        ideal_equal(&top, &curve).unwrap(),
        hilbert_dim_degree(&top).unwrap()
    );

    // single-power candidates: W + (q_i^e)
    for var in ["q1", "q2", "q3"] {
        for e in 1..=4u32 {
            let mut gens = w.gens().to_vec();
            gens.push(p(var).pow(e));
            let cand = saturate_irrelevant(&Ideal::new(&ring, gens), &budget).unwrap();
            let cand = saturation(&cand, &Ideal::new(&ring, vec![p("q4")])).unwrap();
            let dd = hilbert_dim_degree(&cand).unwrap();
            let eq = ideal_equal(&cand, &displayed_reversed).unwrap();
            let meet = ideal_intersection(&top, &cand).unwrap();
            let recompose = ideal_equal(&meet, &w).unwrap();
            eprintln!(
                "sat(W_sat + {var}^{e}) : q4^inf: dim/deg {dd:?}, equals displayed: {eq}, recomposes: {recompose}"
            );
        }
    }

    let m_gens = vec![p("q1"), p("q2"), p("q3")];
    for e in 2..=6usize {
        let mut pow = vec![Polynomial::one(&ring)];
        for _ in 0..e {
            let mut next = Vec::new();
            for f in &pow {
                for g in &m_gens {
                    let fg = f.mul(g);
                    if !next.contains(&fg) {
                        next.push(fg);
                    }
                }
            }
            pow = next;
        }
        let mut gens = w.gens().to_vec();
        gens.extend(pow.iter().cloned());
        let cand = saturate_irrelevant(&Ideal::new(&ring, gens), &budget).unwrap();
        let dd = hilbert_dim_degree(&cand).unwrap();
        let eq = ideal_equal(&cand, &displayed_reversed).unwrap();
        let meet = ideal_intersection(&top, &cand).unwrap();
        let recompose = ideal_equal(&meet, &w).unwrap();
        eprintln!("sat(W_sat + m^{e}): dim/deg {dd:?}, equals displayed(rev): {eq}, top ∩ cand == W_sat: {recompose}");
    }
}
