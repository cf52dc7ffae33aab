use hessex_core::groebner::GbOptions;
use hessex_core::hessenberg::{minimal_sheet_line, rank_ideals, special, HessenbergFunction};
use hessex_core::multidegree::{krull_dimension, multidegree};
use hessex_core::order::MonomialOrder;
use hessex_core::schubert::{class_formula, schubert_determinantal_ideal, schubert_polynomial, Permutation};
use hessex_core::util::rat;
use hessex_core::variable::Ring;

fn main() {
    let ord = MonomialOrder::elimination();
    let _opts = GbOptions::default();
    let zr = Ring::z_only(4);

    // multidegree(K2) vs Schubert polynomial of v[2] = [1423]
    let k2 = special::k_of(zr, 2).unwrap();
    println!("md(K2)        = {}", multidegree(&k2, &ord).unwrap());
    println!("S[1423]       = {}", schubert_polynomial(&Permutation::parse("1423").unwrap()));

    // Knutson-Miller for several perms
    for s in ["2134", "1423", "2143", "2314", "3142", "4132", "3421", "3214", "4123", "2413", "2341"] {
        let w = Permutation::parse(s).unwrap();
        let i = schubert_determinantal_ideal(&w).unwrap();
        let md = multidegree(&i, &MonomialOrder::antidiagonal(4)).unwrap();
        let sp = schubert_polynomial(&w);
        println!("[{}] md = {}   S_w = {}   match={}", s, md, sp, md == sp);
    }

    // the springer-fiber case h = (1,2,3,4)
    let h = HessenbergFunction::new(vec![1, 2, 3, 4]).unwrap();
    let line = minimal_sheet_line(4);
    let nilp = rank_ideals::hessenberg_ideal(&line.fiber_matrix(&rat(0)), &h).unwrap();
    let md = multidegree(&nilp, &ord).unwrap();
    println!("md(I_n,(1234)) = {}", md);
    println!("class_formula  = {}", class_formula(&h, 4).unwrap());
    let sum_display: hessex_core::XPoly = ["1423", "2143", "2314"]
        .iter()
        .map(|s| schubert_polynomial(&Permutation::parse(s).unwrap()).scale(2))
        .fold(hessex_core::XPoly::zero(4), |a, b| a.add(&b));
    println!("2(S1423+S2143+S2314) = {}", sum_display);
    let sum_formula: hessex_core::XPoly = ["4123", "2413", "2341"]
        .iter()
        .map(|s| schubert_polynomial(&Permutation::parse(s).unwrap()).scale(2))
        .fold(hessex_core::XPoly::zero(4), |a, b| a.add(&b));
    println!("2(S4123+S2413+S2341) = {}", sum_formula);
    println!("dim I_n,(1234) = {}", krull_dimension(&nilp, &ord).unwrap());

    // h=(2,4,4,4) class
    let h2 = HessenbergFunction::new(vec![2, 4, 4, 4]).unwrap();
    println!("class (2,4,4,4) = {}", class_formula(&h2, 4).unwrap());
    let s_mat = hessex_core::hessenberg::minimal_semisimple_matrix(4);
    let is2 = rank_ideals::hessenberg_ideal(&s_mat, &h2).unwrap();
    println!("md(I_s,(2444)) = {}", multidegree(&is2, &ord).unwrap());
    println!("dim(I_s,(2444)) = {}", krull_dimension(&is2, &ord).unwrap());
    println!("dim C[t,z]/K2(t-ring) = {}", krull_dimension(&special::k_of(Ring::with_t(4), 2).unwrap(), &ord).unwrap());
}
