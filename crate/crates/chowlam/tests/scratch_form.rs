use chowlam::grassmann::{
    coords_to_values, dual_plucker_vector, primal_dual_convert, ConvertDirection, SubspaceMatrix,
};
use chowlam::groebner::{groebner_basis, normal_form, Ideal, MonomialOrder};
use chowlam::poly::{parse_polynomial, RationalMatrix};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::{Rng, SeedableRng};

#[test]
fn compare_forms_mod_plucker() {
    let vars = ["p12", "p13", "p14", "p23", "p24", "p34"];
    let plucker = Ideal::parse(&vars, &["p12*p34 - p13*p24 + p14*p23"]).unwrap();
    let ring = plucker.ring().clone();
    let gb = groebner_basis(&plucker, MonomialOrder::GrevLex).unwrap();
    let paper = parse_polynomial(
        "p14^5 - p13^3*p14*p24 + 3*p12*p13*p14^2*p24 + p12^3*p24^2 \
         + p13^4*p34 - p12^3*p23*p34 - 4*p12*p13^2*p14*p34 + 2*p12^2*p14^2*p34",
        &ring,
    )
    .unwrap();
    let mine = parse_polynomial(
        "p14^5 - p13*p14*p24^3 + p12*p24^4 + 3*p13*p14^2*p24*p34 - 4*p12*p14*p24^2*p34 \
         + 2*p12*p14^2*p34^2 + p13^2*p34^3 - p12*p23*p34^3",
        &ring,
    )
    .unwrap();
    let nf_paper = normal_form(&paper, &gb).unwrap();
    let nf_mine = normal_form(&mine, &gb).unwrap();
    eprintln!("proportional mod quadric: {}", nf_paper.proportional(&nf_mine));

    // exact evaluation on random lines through a curve point
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(101);
    let mut paper_fails = 0;
    let mut mine_fails = 0;
    for trial in 0..40 {
        let t = BigRational::new(
            BigInt::from(rng.gen_range(-12i64..=12)),
            BigInt::from(rng.gen_range(1i64..=5)),
        );
        let x = vec![
            BigRational::from_integer(1.into()),
            t.clone(),
            &t * &t,
            &t * &t * &t * &t * &t,
        ];
        let a: Vec<BigRational> = (0..4)
            .map(|_| BigRational::from_integer(BigInt::from(rng.gen_range(-9i64..=9))))
            .collect();
        let m = RationalMatrix::from_rows(vec![x, a]);
        if m.rank() != 2 {
            continue;
        }
        let q = dual_plucker_vector(&SubspaceMatrix::rowspan(m).unwrap()).unwrap();
        let p = primal_dual_convert(&q, 2, 4, ConvertDirection::DualToPrimal).unwrap();
        let vals = coords_to_values(&p, 2, 4);
        let vp = paper.evaluate_slice(&vals);
        let vm = mine.evaluate_slice(&vals);
        if !vp.is_zero() {
            paper_fails += 1;
            if paper_fails == 1 {
                eprintln!("trial {trial}: paper form nonzero");
            }
        }
        if !vm.is_zero() {
            mine_fails += 1;
            if mine_fails == 1 {
                eprintln!("trial {trial}: mine nonzero");
            }
        }
    }
    eprintln!("paper fails: {paper_fails}/40, mine fails: {mine_fails}/40");
}
