//! Decision procedures for absolute continuity and singularity.
//!
//! The sufficient condition for a convolution product to be absolutely
//! continuous is a family of integer inequalities over the corank-one
//! closed subsystems Ψ:
//!
//! ```text
//! (m-1)(dim Φ - dim Ψ) - 1  >=  Σ_i ( dim Φ_{X_i} - min_σ dim(Φ_{X_i} ∩ σΨ) )
//! ```
//!
//! with the minimum over the Weyl orbit. `wright_reduced` is an independent
//! route for multiplicity-one systems that counts base coefficients over the
//! orbit of Φ_X instead; the two must agree and are cross-checked in tests.
//!
//! Singularity comes from two certificates: the dimension test
//! `m · dim N_X < dim p`, and disjointness witnesses: conjugates σ_j(Φ_{X_j})
//! and a corank-one Ψ whose non-annihilated positive-root sets are pairwise
//! disjoint.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::rootset::RootSet;
use crate::subsystem::{self, AnnihilatorType};
use crate::weyl::Session;

/// Outcome of one Wright check.
#[derive(Debug, Clone)]
pub struct WrightReport {
    pub m: usize,
    pub holds: bool,
    /// The corank-one class with the smallest slack.
    pub binding_psi: AnnihilatorType,
    /// `LHS - RHS` at the binding class; nonnegative for every class iff
    /// the criterion holds.
    pub slack: i64,
    /// Per corank-one class label: the orbit-minimal weighted intersection
    /// dimension with each annihilator of the tuple.
    pub min_intersection_dims: Vec<(String, Vec<u64>)>,
}

/// Minimum over the Weyl orbit of `psi` of the weighted dimension of
/// `phi_x ∩ σ(psi)`. Memoized per session.
pub fn min_intersection_dim(session: &Session, phi_x: &RootSet, psi: &RootSet) -> Result<u64> {
    let key = (*phi_x, *psi);
    if let Some(hit) = session.min_dim_memo_get(&key) {
        return Ok(hit);
    }
    let value = min_over_orbit(session, psi, phi_x)?;
    session.min_dim_memo_put(key, value);
    Ok(value)
}

/// Same minimum computed from the other side, over the orbit of `phi_x`.
/// The value set of `dim(Φ_X ∩ σΨ)` is the same either way; this second
/// route exists as a cross-check.
pub fn min_intersection_dim_via_phix(
    session: &Session,
    phi_x: &RootSet,
    psi: &RootSet,
) -> Result<u64> {
    min_over_orbit(session, phi_x, psi)
}

fn min_over_orbit(session: &Session, moving: &RootSet, fixed: &RootSet) -> Result<u64> {
    let rs = session.rs();
    let orbit = session.orbit(moving)?;
    let dim_of = |member: &RootSet| rs.weighted_dim(&member.and(fixed));
    let min = if orbit.size() >= 4096 {
        orbit.members.par_iter().map(dim_of).min()
    } else {
        orbit.members.iter().map(dim_of).min()
    };
    Ok(min.expect("orbit is never empty"))
}

/// The tuple form of the sufficient condition, checked against every
/// corank-one class.
pub fn wright_tuple(session: &Session, annihilators: &[RootSet]) -> Result<WrightReport> {
    let m = annihilators.len();
    assert!(m >= 2, "wright criterion needs at least two factors");
    let rs = session.rs();
    let catalog = session.catalog()?;
    let dim_phi = rs.dim() as i64;
    let ann_dims: Vec<i64> = annihilators
        .iter()
        .map(|a| subsystem::dim_subsystem(rs, a) as i64)
        .collect();

    let mut binding: Option<(i64, usize)> = None;
    let mut rows = Vec::new();
    for (pi, psi) in catalog.corank_one().into_iter().enumerate() {
        let mins: Vec<u64> = annihilators
            .iter()
            .map(|a| min_intersection_dim(session, a, &psi.rep))
            .collect::<Result<_>>()?;
        let lhs = (m as i64 - 1) * (dim_phi - psi.dim as i64) - 1;
        let rhs: i64 = ann_dims
            .iter()
            .zip(&mins)
            .map(|(&d, &mn)| d - mn as i64)
            .sum();
        let slack = lhs - rhs;
        if binding.map(|(s, _)| slack < s).unwrap_or(true) {
            binding = Some((slack, pi));
        }
        rows.push((psi.label.clone(), mins));
    }
    let (slack, pi) = binding.expect("at least one corank-one class");
    Ok(WrightReport {
        m,
        holds: slack >= 0,
        binding_psi: catalog.corank_one()[pi].clone(),
        slack,
        min_intersection_dims: rows,
    })
}

/// The power form: the tuple condition with `m` copies of one annihilator.
pub fn wright_power(session: &Session, phi_x: &RootSet, m: usize) -> Result<WrightReport> {
    let mut report = wright_tuple(session, &vec![*phi_x; m])?;
    // the m per-factor minima coincide; report each class once
    for (_, mins) in &mut report.min_intersection_dims {
        mins.dedup();
    }
    Ok(report)
}

/// Multiplicity-one reduction: for every base position `j` and every Weyl
/// conjugate `X'` of `X`,
///
/// ```text
/// (m-1)|X1| - m|B1| >= 1,
/// X1 = {α ∈ Φ+ : coeff_j(α) ≠ 0},  B1 = {α ∈ Φ_{X'}+ : coeff_j(α) ≠ 0}.
/// ```
///
/// This enumerates the orbit of Φ_X and counts coefficients; it shares no
/// arithmetic with [`wright_power`] beyond the orbit machinery.
pub fn wright_reduced(session: &Session, phi_x: &RootSet, m: usize) -> Result<WrightReport> {
    let rs = session.rs();
    if !rs.all_mult_one() {
        return Err(Error::MultiplicityNotOne);
    }
    assert!(m >= 2, "wright criterion needs at least two factors");
    let catalog = session.catalog()?;
    let full_mask: u16 = ((1u32 << rs.rank()) - 1) as u16;
    let orbit = session.orbit(phi_x)?;

    let mut binding: Option<(i64, usize)> = None;
    let mut per_class_min: Vec<(String, Vec<u64>)> = Vec::new();
    let mut seen_class: Vec<usize> = Vec::new();
    for j in 0..rs.rank() {
        let mask_j = rs.coeff_nonzero_mask(j).and(rs.positive());
        let x1 = mask_j.len() as i64;
        let max_b1 = orbit
            .members
            .iter()
            .map(|member| member.and(&mask_j).len() as i64)
            .max()
            .expect("orbit is never empty");
        let slack = (m as i64 - 1) * x1 - m as i64 * max_b1 - 1;

        let class = catalog
            .class_index_of_subset(full_mask & !(1 << j))
            .expect("corank-one subset is cataloged");
        if binding.map(|(s, _)| slack < s).unwrap_or(true) {
            binding = Some((slack, class));
        }
        // min intersection with Ψ_j, computed on the reduced route as the
        // positive roots of the conjugate with coefficient zero at j
        let min_dim = orbit
            .members
            .iter()
            .map(|member| member.and(rs.positive()).minus(&mask_j).len() as u64)
            .min()
            .unwrap();
        if !seen_class.contains(&class) {
            seen_class.push(class);
            let label = catalog.classes[class].label.clone();
            per_class_min.push((label, vec![min_dim]));
        }
    }
    let (slack, class) = binding.expect("rank is at least one");
    Ok(WrightReport {
        m,
        holds: slack >= 0,
        binding_psi: catalog.classes[class].clone(),
        slack,
        min_intersection_dims: per_class_min,
    })
}

/// Dimension test for singularity: `m · dim N_X < dim p` forces the `m`-fold
/// convolution to be singular.
pub fn dimension_singularity(session: &Session, phi_x: &RootSet, m: usize, dim_p: u64) -> bool {
    let rs = session.rs();
    let dim_nx = rs.dim() - subsystem::dim_subsystem(rs, phi_x);
    (m as u64) * dim_nx < dim_p
}

/// A disjointness certificate for singularity.
#[derive(Debug, Clone)]
pub struct Witness {
    /// Already-conjugated annihilators σ_j(Φ_{X_j}).
    pub conjugated_annihilators: Vec<RootSet>,
    /// Corank-one closed subsystem.
    pub psi: RootSet,
    /// Per factor: positive roots annihilated by neither σ_j(Φ_{X_j}) nor Ψ.
    pub intersection_sets: Vec<RootSet>,
}

impl Witness {
    pub fn m(&self) -> usize {
        self.conjugated_annihilators.len()
    }
}

fn witness_sets(session: &Session, annihilators: &[RootSet], psi: &RootSet) -> Vec<RootSet> {
    let rs = session.rs();
    let outside_psi = rs.positive().minus(psi);
    annihilators
        .iter()
        .map(|a| outside_psi.minus(a))
        .collect()
}

fn check_psi(session: &Session, psi: &RootSet) -> Result<()> {
    let rs = session.rs();
    if !rs.is_negation_closed(psi) {
        return Err(Error::MalformedWitness(
            "psi is not closed under negation".into(),
        ));
    }
    if subsystem::r_closure(rs, psi) != *psi {
        return Err(Error::MalformedWitness("psi is not R-closed".into()));
    }
    if rs.span_rank(psi) + 1 != rs.rank() {
        return Err(Error::MalformedWitness("psi does not have corank one".into()));
    }
    Ok(())
}

/// Verifies a witness: recomputes the per-factor sets
/// `(Φ+ \ σ_j Φ_{X_j}) ∩ (Φ+ \ Ψ)` and confirms pairwise disjointness.
pub fn verify_witness(session: &Session, w: &Witness) -> Result<bool> {
    check_psi(session, &w.psi)?;
    for a in &w.conjugated_annihilators {
        if !session.rs().is_negation_closed(a) {
            return Err(Error::MalformedWitness(
                "annihilator is not closed under negation".into(),
            ));
        }
    }
    let sets = witness_sets(session, &w.conjugated_annihilators, &w.psi);
    Ok(pairwise_disjoint(&sets))
}

/// The same verdict with multiplicity-weighted bookkeeping: the summed
/// weighted dimension of all pairwise overlaps must vanish. Disjointness of
/// whole root spaces is equivalent to disjointness of index sets, so this
/// agrees with [`verify_witness`]; it exists to make the weighted reading
/// checkable on its own.
pub fn verify_witness_weighted(session: &Session, w: &Witness) -> Result<bool> {
    check_psi(session, &w.psi)?;
    let rs = session.rs();
    let sets = witness_sets(session, &w.conjugated_annihilators, &w.psi);
    let mut overlap: u64 = 0;
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            overlap += rs.weighted_dim(&sets[i].and(&sets[j]));
        }
    }
    Ok(overlap == 0)
}

fn pairwise_disjoint(sets: &[RootSet]) -> bool {
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if !sets[i].is_disjoint(&sets[j]) {
                return false;
            }
        }
    }
    true
}

/// Exhaustive search for a disjointness witness.
///
/// Ranges over every corank-one class (with Ψ fixed to the class
/// representative; conjugating a whole witness preserves validity, so this
/// loses nothing) and over the full Weyl orbit of each annihilator. Returns
/// the first verified witness in (Ψ class, orbit index) order, or `None`
/// after exhausting the finite search space.
pub fn witness_search(session: &Session, annihilators: &[RootSet]) -> Result<Option<Witness>> {
    let m = annihilators.len();
    assert!(m >= 2, "witness search needs at least two factors");
    let rs = session.rs();
    let catalog = session.catalog()?;
    let limit = session.limits().max_witness_checks;
    let mut checked: u64 = 0;

    for psi in catalog.corank_one() {
        let outside_psi = rs.positive().minus(&psi.rep);
        let orbits: Vec<_> = annihilators
            .iter()
            .map(|a| session.orbit(a))
            .collect::<Result<Vec<_>>>()?;

        // odometer over orbit members of each factor
        let sizes: Vec<usize> = orbits.iter().map(|o| o.size()).collect();
        let mut idx = vec![0usize; m];
        'product: loop {
            checked += 1;
            if checked > limit {
                return Err(Error::ResourceCeiling {
                    what: "witness search",
                    reached: checked as usize,
                    limit: limit as usize,
                });
            }
            let sets: Vec<RootSet> = idx
                .iter()
                .enumerate()
                .map(|(f, &i)| outside_psi.minus(&orbits[f].members[i]))
                .collect();
            if pairwise_disjoint(&sets) {
                let conj: Vec<RootSet> = idx
                    .iter()
                    .enumerate()
                    .map(|(f, &i)| orbits[f].members[i])
                    .collect();
                return Ok(Some(Witness {
                    conjugated_annihilators: conj,
                    psi: psi.rep,
                    intersection_sets: sets,
                }));
            }
            // advance odometer
            for d in (0..m).rev() {
                idx[d] += 1;
                if idx[d] < sizes[d] {
                    continue 'product;
                }
                idx[d] = 0;
            }
            break;
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::{Family, MultiplicityPattern, RootSystem};
    use crate::vector::ExactVector;

    fn closed_set(rs: &RootSystem, coords: &[&[i64]]) -> RootSet {
        let mut s = RootSet::EMPTY;
        for c in coords {
            let i = rs.root_index(&ExactVector::from_ints(c)).expect("root");
            s.insert(i);
            s.insert(rs.neg_index(i));
        }
        s
    }

    fn eiv() -> RootSystem {
        RootSystem::build(Family::A, 2)
            .unwrap()
            .attach_multiplicities(&MultiplicityPattern::uniform(8))
            .unwrap()
    }

    fn evii() -> RootSystem {
        RootSystem::build(Family::C, 3)
            .unwrap()
            .attach_multiplicities(&MultiplicityPattern::by_norm_sq(&[(2, 8), (4, 1)]))
            .unwrap()
    }

    fn eiii() -> RootSystem {
        RootSystem::build(Family::BC, 2)
            .unwrap()
            .attach_multiplicities(&MultiplicityPattern::by_norm_sq(&[(2, 6), (1, 8), (4, 1)]))
            .unwrap()
    }

    #[test]
    fn min_intersection_a2() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let session = Session::new(&rs);
        let a1 = closed_set(&rs, &[&[1, -1, 0]]);
        // three conjugate A1s meet each other trivially
        assert_eq!(min_intersection_dim(&session, &a1, &a1).unwrap(), 0);
        // upper bound: the identity conjugate gives dim(phi_x) itself
        let orbit = session.orbit(&a1).unwrap();
        let max = orbit
            .members
            .iter()
            .map(|m| rs.weighted_dim(&m.and(&a1)))
            .max()
            .unwrap();
        assert_eq!(max, 1);
    }

    #[test]
    fn min_intersection_evii_c2_pair() {
        let rs = evii();
        let session = Session::new(&rs);
        let c2 = closed_set(&rs, &[&[1, -1, 0], &[1, 1, 0], &[2, 0, 0], &[0, 2, 0]]);
        // the conjugate C2 on {e2,e3} meets it exactly in {±2e2}
        assert_eq!(min_intersection_dim(&session, &c2, &c2).unwrap(), 1);
        // both enumeration sides agree
        assert_eq!(
            min_intersection_dim_via_phix(&session, &c2, &c2).unwrap(),
            1
        );
    }

    #[test]
    fn wright_tuple_eiv() {
        let rs = eiv();
        let session = Session::new(&rs);
        let a1 = closed_set(&rs, &[&[1, -1, 0]]);
        // m=2: LHS = (24-8)-1 = 15 < 16 = RHS
        let r2 = wright_tuple(&session, &[a1, a1]).unwrap();
        assert!(!r2.holds);
        assert_eq!(r2.slack, -1);
        assert_eq!(r2.binding_psi.label, "A1");
        // m=3: 2*16-1 = 31 >= 24
        let r3 = wright_tuple(&session, &[a1, a1, a1]).unwrap();
        assert!(r3.holds);
        assert_eq!(r3.slack, 7);
        // tuples of regular annihilators always pass at m=2
        let r = wright_tuple(&session, &[RootSet::EMPTY, RootSet::EMPTY]).unwrap();
        assert!(r.holds);
    }

    #[test]
    fn wright_power_evii() {
        let rs = evii();
        let session = Session::new(&rs);
        let c2 = closed_set(&rs, &[&[1, -1, 0], &[1, 1, 0], &[2, 0, 0], &[0, 2, 0]]);
        let r2 = wright_power(&session, &c2, 2).unwrap();
        assert!(!r2.holds);
        assert_eq!(r2.binding_psi.label, "C2");
        assert_eq!(r2.slack, -2); // 32 - 34
        let r3 = wright_power(&session, &c2, 3).unwrap();
        assert!(r3.holds);
        // the A2 row must show the minimum intersection dimension 8
        let a2_row = r3
            .min_intersection_dims
            .iter()
            .find(|(l, _)| l == "A2")
            .unwrap();
        assert_eq!(a2_row.1, vec![8]);

        let a2 = closed_set(&rs, &[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]);
        let r2 = wright_power(&session, &a2, 2).unwrap();
        assert!(!r2.holds);
        let r3 = wright_power(&session, &a2, 3).unwrap();
        assert!(r3.holds);

        let a1c1 = closed_set(&rs, &[&[1, -1, 0], &[0, 0, 2]]);
        assert!(wright_power(&session, &a1c1, 2).unwrap().holds);
    }

    #[test]
    fn wright_power_eiii_and_g() {
        let rs = eiii();
        let session = Session::new(&rs);
        let bc1 = closed_set(&rs, &[&[0, 1], &[0, 2]]);
        assert!(wright_power(&session, &bc1, 2).unwrap().holds);
        let a1 = closed_set(&rs, &[&[1, -1]]);
        assert!(wright_power(&session, &a1, 2).unwrap().holds);

        let g2 = RootSystem::build(Family::G, 2).unwrap();
        let session = Session::new(&g2);
        for coords in [[1i64, -1, 0], [2, -1, -1]] {
            let a1 = closed_set(&g2, &[&coords]);
            let r = wright_power(&session, &a1, 2).unwrap();
            assert!(r.holds);
            assert_eq!(r.slack, 2); // 4 - 2
        }
    }

    #[test]
    fn wright_reduced_matches_and_rejects() {
        // multiplicity-one requirement
        let rs = evii();
        let session = Session::new(&rs);
        let c2 = closed_set(&rs, &[&[1, -1, 0], &[1, 1, 0], &[2, 0, 0], &[0, 2, 0]]);
        assert!(matches!(
            wright_reduced(&session, &c2, 2),
            Err(Error::MultiplicityNotOne)
        ));

        // E6: D5 fails at m=2, passes at m=3
        let e6 = RootSystem::build(Family::E, 6).unwrap();
        let session = Session::new(&e6);
        let catalog = session.catalog().unwrap();
        let d5 = catalog.class_by_label("D5").unwrap().rep;
        assert!(!wright_reduced(&session, &d5, 2).unwrap().holds);
        assert!(wright_reduced(&session, &d5, 3).unwrap().holds);
        assert!(!wright_power(&session, &d5, 2).unwrap().holds);
        assert!(wright_power(&session, &d5, 3).unwrap().holds);

        // F4: every proper annihilator passes at m=2 on both routes
        let f4 = RootSystem::build(Family::F, 4).unwrap();
        let session = Session::new(&f4);
        let catalog = session.catalog().unwrap();
        for class in &catalog.classes {
            let reduced = wright_reduced(&session, &class.rep, 2).unwrap();
            let power = wright_power(&session, &class.rep, 2).unwrap();
            assert!(reduced.holds, "{}", class.label);
            assert_eq!(reduced.holds, power.holds);
        }
    }

    #[test]
    fn dimension_singularity_cases() {
        // EI = E6 with multiplicity one, dim p = 42
        let e6 = RootSystem::build(Family::E, 6).unwrap();
        let session = Session::new(&e6);
        let catalog = session.catalog().unwrap();
        let d5 = catalog.class_by_label("D5").unwrap().rep;
        let a5 = catalog.class_by_label("A5").unwrap().rep;
        assert!(dimension_singularity(&session, &d5, 2, 42)); // 2*16 < 42
        assert!(!dimension_singularity(&session, &a5, 2, 42)); // 2*21 = 42, not strict

        // EVIII = E8, dim p = 128, E7 annihilator
        let e8 = RootSystem::build(Family::E, 8).unwrap();
        let session = Session::new(&e8);
        let catalog = session.catalog().unwrap();
        let e7 = catalog.class_by_label("E7").unwrap().rep;
        assert!(dimension_singularity(&session, &e7, 2, 128)); // 2*57 < 128
    }

    #[test]
    fn paper_witnesses_verify() {
        // A2 with multiplicity 8: Φ_X = {±(e1-e2)}, Φ_{σX} = {±(e2-e3)},
        // Ψ = {±(e1-e3)}; the computed sets are {e2-e3} and {e1-e2}.
        let rs = eiv();
        let session = Session::new(&rs);
        let w = Witness {
            conjugated_annihilators: vec![
                closed_set(&rs, &[&[1, -1, 0]]),
                closed_set(&rs, &[&[0, 1, -1]]),
            ],
            psi: closed_set(&rs, &[&[1, 0, -1]]),
            intersection_sets: vec![],
        };
        assert!(verify_witness(&session, &w).unwrap());
        assert!(verify_witness_weighted(&session, &w).unwrap());
        let sets = witness_sets(&session, &w.conjugated_annihilators, &w.psi);
        assert_eq!(sets[0], closed_set(&rs, &[&[0, 1, -1]]).and(rs.positive()));
        assert_eq!(sets[1], closed_set(&rs, &[&[1, -1, 0]]).and(rs.positive()));

        // C3: Φ_X = {e1±e2, 2e1, 2e2}, Φ_{σX} = {e2±e3, 2e2, 2e3},
        // Ψ = {e1±e3, 2e1, 2e3}
        let rs = evii();
        let session = Session::new(&rs);
        let w = Witness {
            conjugated_annihilators: vec![
                closed_set(&rs, &[&[1, -1, 0], &[1, 1, 0], &[2, 0, 0], &[0, 2, 0]]),
                closed_set(&rs, &[&[0, 1, -1], &[0, 1, 1], &[0, 2, 0], &[0, 0, 2]]),
            ],
            psi: closed_set(&rs, &[&[1, 0, -1], &[1, 0, 1], &[2, 0, 0], &[0, 0, 2]]),
            intersection_sets: vec![],
        };
        assert!(verify_witness(&session, &w).unwrap());
        assert!(verify_witness_weighted(&session, &w).unwrap());

        // identical annihilators with identity conjugates overlap
        let a1 = closed_set(&rs, &[&[1, -1, 0]]);
        let bad = Witness {
            conjugated_annihilators: vec![a1, a1],
            psi: w.psi,
            intersection_sets: vec![],
        };
        assert!(!verify_witness(&session, &bad).unwrap());

        // malformed psi: not corank one
        let malformed = Witness {
            conjugated_annihilators: vec![a1, a1],
            psi: closed_set(&rs, &[&[2, 0, 0]]),
            intersection_sets: vec![],
        };
        assert!(verify_witness(&session, &malformed).is_err());
    }

    #[test]
    fn witness_search_finds_and_exhausts() {
        // EIV (A1, A1): a witness exists
        let rs = eiv();
        let session = Session::new(&rs);
        let a1 = closed_set(&rs, &[&[1, -1, 0]]);
        let w = witness_search(&session, &[a1, a1]).unwrap().expect("witness");
        assert!(verify_witness(&session, &w).unwrap());

        // EVII (C2, C2): a witness exists
        let rs = evii();
        let session = Session::new(&rs);
        let c2 = closed_set(&rs, &[&[1, -1, 0], &[1, 1, 0], &[2, 0, 0], &[0, 2, 0]]);
        let w = witness_search(&session, &[c2, c2]).unwrap().expect("witness");
        assert!(verify_witness(&session, &w).unwrap());

        // EVII (A2, A2): exhaustive search comes back empty
        let a2 = closed_set(&rs, &[&[1, -1, 0], &[0, 1, -1], &[1, 0, -1]]);
        assert!(witness_search(&session, &[a2, a2]).unwrap().is_none());
    }

    #[test]
    fn witness_is_conjugation_invariant() {
        let rs = eiv();
        let session = Session::new(&rs);
        let a1 = closed_set(&rs, &[&[1, -1, 0]]);
        let w = witness_search(&session, &[a1, a1]).unwrap().unwrap();
        for g in session.generators() {
            let moved = Witness {
                conjugated_annihilators: w
                    .conjugated_annihilators
                    .iter()
                    .map(|s| g.apply_set(s))
                    .collect(),
                psi: g.apply_set(&w.psi),
                intersection_sets: vec![],
            };
            assert!(verify_witness(&session, &moved).unwrap());
        }
    }
}
