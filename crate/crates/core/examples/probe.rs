use orbitcert_core::criteria::*;
use orbitcert_core::subsystem::*;
use orbitcert_core::*;

fn main() {
    let rs = RootSystem::build(Family::E, 6).unwrap();
    let session = Session::new(&rs);
    let cat = session.catalog().unwrap();
    let a5 = cat.class_by_label("A5").unwrap();
    println!("A5 rep ({} roots, dim {}):", a5.rep.len(), a5.dim);
    let w = witness_search(&session, &[a5.rep, a5.rep]).unwrap().unwrap();
    println!("psi type: {}", identify_type(&rs, &w.psi).unwrap());
    println!("psi span rank: {}", rs.span_rank(&w.psi));
    println!("psi r-closed: {}", is_r_closed(&rs, &w.psi));
    for (j, f) in w.conjugated_annihilators.iter().enumerate() {
        println!(
            "factor {}: type {} conjugate-to-A5: {}",
            j,
            identify_type(&rs, f).unwrap(),
            session.are_conjugate(f, &a5.rep).unwrap()
        );
    }
    for (j, s) in w.intersection_sets.iter().enumerate() {
        let roots: Vec<String> = s.iter().map(|i| format!("{:?}", rs.root(i))).collect();
        println!("set {} ({}): {}", j, s.len(), roots.join(" "));
    }
    println!("disjoint: {}", w.intersection_sets[0].is_disjoint(&w.intersection_sets[1]));
    println!("verify: {}", verify_witness(&session, &w).unwrap());
    println!("verify weighted: {}", verify_witness_weighted(&session, &w).unwrap());

    // independent re-check: recompute the two sets from scratch
    let pos = rs.positive();
    let d0 = pos.minus(&w.conjugated_annihilators[0]).minus(&w.psi);
    let d1 = pos.minus(&w.conjugated_annihilators[1]).minus(&w.psi);
    println!("recomputed disjoint: {} sizes {} {}", d0.is_disjoint(&d1), d0.len(), d1.len());
}
