use chowlam::chow::{chow_lam_ideal, recovery_ideal, VarietyIdeal};
use chowlam::grassmann::{plucker_ring, GrassmannContext};
use chowlam::groebner::{
    hilbert_dim_degree, interreduce, is_unit_ideal, saturation, Budget, Ideal,
};
use chowlam::poly::parse_polynomial;
use std::time::Instant;

#[test]
fn profile_gr24_residual_phases() {
    let ctx = GrassmannContext::new(2, 4, 3).unwrap();
    let budget = Budget::default();
    let ring = plucker_ring("q", 2, 4);
    let gens = [
        "q24^2 - 4*q23*q34",
        "3*q14*q24 - 10*q13*q34",
        "q13*q24 - 6*q12*q34",
        "8*q14^2 - 25*q23*q24",
        "q23*q14 - 5*q12*q34",
        "15*q23^2 - 4*q13*q14",
        "2*q13*q23 - 3*q12*q24",
        "5*q13^2 - 9*q12*q14",
    ];
    let v = VarietyIdeal::new(
        ctx,
        Ideal::new(
            &ring,
            gens.iter()
                .map(|s| parse_polynomial(s, &ring).unwrap())
                .collect(),
        ),
    )
    .unwrap();
    let t0 = Instant::now();
    let result = chow_lam_ideal(&v, &budget).unwrap();
    eprintln!("chow_lam_ideal: {:?}", t0.elapsed());
    let t0 = Instant::now();
    let w = recovery_ideal(&result).unwrap();
    eprintln!("recovery: {:?} ({} gens)", t0.elapsed(), w.gens().len());
    let t0 = Instant::now();
    let w = interreduce(&w, &budget).unwrap();
    eprintln!("interreduce: {:?} ({} gens)", t0.elapsed(), w.gens().len());
    for g in w.gens().iter().take(40) {
        eprintln!(
            "  gen deg {:?} terms {}",
            g.total_degree(),
            g.num_terms()
        );
    }
    let t0 = Instant::now();
    let sat = saturation(&w, &v.ideal).unwrap();
    eprintln!(
        "saturation by I_V: {:?} (unit: {})",
        t0.elapsed(),
        is_unit_ideal(&sat).unwrap()
    );
    let t0 = Instant::now();
    let w0 = chowlam::groebner::saturate_irrelevant(&w, &budget).unwrap();
    eprintln!("sat_irrelevant: {:?} ({} gens)", t0.elapsed(), w0.gens().len());
    let t0 = Instant::now();
    let dd = hilbert_dim_degree(&w0).unwrap();
    eprintln!("hilbert(w0): {:?} -> {dd:?}", t0.elapsed());
    // top part
    let pt_a = Ideal::new(
        &ring,
        ["q12", "q13", "q14", "q23", "q24"]
            .iter()
            .map(|s| parse_polynomial(s, &ring).unwrap())
            .collect(),
    );
    let pt_b = Ideal::new(
        &ring,
        ["q13", "q14", "q23", "q24", "q34"]
            .iter()
            .map(|s| parse_polynomial(s, &ring).unwrap())
            .collect(),
    );
    let t0 = Instant::now();
    let top = saturation(&w0, &pt_a).unwrap();
    eprintln!("sat by pt_a: {:?}", t0.elapsed());
    let t0 = Instant::now();
    let top = saturation(&top, &pt_b).unwrap();
    eprintln!("sat by pt_b: {:?}", t0.elapsed());
    let t0 = Instant::now();
    let dd = hilbert_dim_degree(&top).unwrap();
    eprintln!("hilbert(top): {:?} -> {dd:?}", t0.elapsed());
}
