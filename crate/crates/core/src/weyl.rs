//! Weyl group machinery: simple reflections as permutations of root indices,
//! exact group orders through orbit-stabilizer chains, and breadth-first
//! orbit enumeration of subsystems with canonical-form deduplication.
//!
//! Orbits can be large (millions of subsystems for some E8 classes) and are
//! the only expensive computation in the crate, so a [`Session`] carries a
//! memo table and an optional persistent cache. Orbit member lists are
//! always sorted; results are independent of traversal and thread count.

use std::collections::{HashMap, HashSet};
use std::path::PathBuf;
use std::sync::{Arc, OnceLock, RwLock};

use crate::cache;
use crate::error::{Error, Result};
use crate::linalg::IntSpan;
use crate::root_system::RootSystem;
use crate::rootset::RootSet;
use crate::subsystem::{self, AnnihilatorCatalog};

/// A Weyl group element: a permutation of root indices together with a
/// witnessing word in the simple reflections.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    perm: Vec<u16>,
    word: Vec<u8>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        WeylElement {
            perm: (0..n as u16).collect(),
            word: Vec::new(),
        }
    }

    pub fn perm(&self) -> &[u16] {
        &self.perm
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    pub fn apply_index(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn apply_set(&self, s: &RootSet) -> RootSet {
        s.mapped(&self.perm)
    }

    /// Composition: `self` first, then `other`.
    pub fn then(&self, other: &WeylElement) -> WeylElement {
        let perm = self.perm.iter().map(|&i| other.perm[i as usize]).collect();
        let mut word = self.word.clone();
        word.extend_from_slice(&other.word);
        WeylElement { perm, word }
    }

    pub fn is_identity(&self) -> bool {
        self.perm.iter().enumerate().all(|(i, &p)| i == p as usize)
    }
}

/// One generator per base element; each is an involution.
pub fn simple_reflections(rs: &RootSystem) -> Vec<WeylElement> {
    rs.base()
        .iter()
        .enumerate()
        .map(|(j, &b)| WeylElement {
            perm: rs.reflection_perm(b as usize),
            word: vec![j as u8],
        })
        .collect()
}

/// Resource ceilings for orbit searches. Exceeding one is a reported error,
/// never a silent truncation.
#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Maximum number of subsystems in one orbit enumeration.
    pub max_orbit: usize,
    /// Maximum number of candidate tuples a witness search may inspect.
    pub max_witness_checks: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_orbit: 8_000_000,
            max_witness_checks: 100_000_000,
        }
    }
}

/// The Weyl orbit of a subsystem, members sorted as canonical forms.
#[derive(Debug, Clone)]
pub struct SubsystemOrbit {
    pub members: Vec<RootSet>,
}

impl SubsystemOrbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, s: &RootSet) -> bool {
        self.members.binary_search(s).is_ok()
    }
}

// Orbits above this size are recomputed rather than held in the memo table.
const MEMO_RETAIN_MAX: usize = 600_000;
// Orbits above this size are not persisted to disk.
const DISK_STORE_MAX: usize = 1_500_000;

/// Per-system computation context: generators, resource limits, orbit memo
/// and optional persistent orbit cache.
pub struct Session<'a> {
    rs: &'a RootSystem,
    gens: Vec<WeylElement>,
    limits: Limits,
    orbit_memo: RwLock<HashMap<RootSet, Arc<SubsystemOrbit>>>,
    min_dim_memo: RwLock<HashMap<(RootSet, RootSet), u64>>,
    catalog: OnceLock<Arc<AnnihilatorCatalog>>,
    cache_dir: Option<PathBuf>,
}

impl<'a> Session<'a> {
    pub fn new(rs: &'a RootSystem) -> Self {
        Session {
            rs,
            gens: simple_reflections(rs),
            limits: Limits::default(),
            orbit_memo: RwLock::new(HashMap::new()),
            min_dim_memo: RwLock::new(HashMap::new()),
            catalog: OnceLock::new(),
            cache_dir: None,
        }
    }

    pub fn with_limits(mut self, limits: Limits) -> Self {
        self.limits = limits;
        self
    }

    /// Enables the persistent orbit cache rooted at `dir`.
    pub fn with_cache_dir(mut self, dir: Option<PathBuf>) -> Self {
        self.cache_dir = dir;
        self
    }

    pub fn rs(&self) -> &'a RootSystem {
        self.rs
    }

    pub fn limits(&self) -> &Limits {
        &self.limits
    }

    pub fn generators(&self) -> &[WeylElement] {
        &self.gens
    }

    /// The annihilator catalog of this system, computed once per session.
    pub fn catalog(&self) -> Result<Arc<AnnihilatorCatalog>> {
        if let Some(c) = self.catalog.get() {
            return Ok(c.clone());
        }
        let computed = Arc::new(subsystem::annihilator_catalog(self)?);
        Ok(self.catalog.get_or_init(|| computed).clone())
    }

    /// Breadth-first closure of `seed` under the simple reflections,
    /// deduplicated by canonical form.
    pub fn orbit(&self, seed: &RootSet) -> Result<Arc<SubsystemOrbit>> {
        if !self.rs.is_negation_closed(seed) {
            return Err(Error::NotNegationClosed);
        }
        if let Some(hit) = self.orbit_memo.read().unwrap().get(seed) {
            return Ok(hit.clone());
        }
        if let Some(dir) = &self.cache_dir {
            if let Some(members) = cache::read_orbit(dir, &self.rs.system_key(), seed)? {
                let orbit = Arc::new(SubsystemOrbit { members });
                self.retain(seed, &orbit);
                return Ok(orbit);
            }
        }

        let members = self.enumerate(seed)?;
        let orbit = Arc::new(SubsystemOrbit { members });
        if let Some(dir) = &self.cache_dir {
            if orbit.size() <= DISK_STORE_MAX {
                cache::write_orbit(dir, &self.rs.system_key(), seed, &orbit.members)?;
            }
        }
        self.retain(seed, &orbit);
        Ok(orbit)
    }

    fn retain(&self, seed: &RootSet, orbit: &Arc<SubsystemOrbit>) {
        if orbit.size() <= MEMO_RETAIN_MAX {
            self.orbit_memo
                .write()
                .unwrap()
                .insert(*seed, orbit.clone());
        }
    }

    fn enumerate(&self, seed: &RootSet) -> Result<Vec<RootSet>> {
        let mut seen: HashSet<RootSet> = HashSet::new();
        seen.insert(*seed);
        let mut frontier = vec![*seed];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for s in &frontier {
                for g in &self.gens {
                    let t = s.mapped(g.perm());
                    if seen.insert(t) {
                        if seen.len() > self.limits.max_orbit {
                            return Err(Error::ResourceCeiling {
                                what: "subsystem orbit",
                                reached: seen.len(),
                                limit: self.limits.max_orbit,
                            });
                        }
                        next.push(t);
                    }
                }
            }
            frontier = next;
        }
        let mut members: Vec<RootSet> = seen.into_iter().collect();
        members.sort();
        Ok(members)
    }

    /// Whether two negation-closed sets lie in the same Weyl orbit.
    ///
    /// Cheap invariants (cardinality, length multiset, span rank) reject
    /// most non-conjugate pairs before any orbit is enumerated.
    pub fn are_conjugate(&self, s1: &RootSet, s2: &RootSet) -> Result<bool> {
        if s1 == s2 {
            return Ok(true);
        }
        if s1.len() != s2.len()
            || norm_multiset(self.rs, s1) != norm_multiset(self.rs, s2)
            || self.rs.span_rank(s1) != self.rs.span_rank(s2)
        {
            return Ok(false);
        }
        Ok(self.orbit(s1)?.contains(s2))
    }

    pub(crate) fn min_dim_memo_get(&self, key: &(RootSet, RootSet)) -> Option<u64> {
        self.min_dim_memo.read().unwrap().get(key).copied()
    }

    pub(crate) fn min_dim_memo_put(&self, key: (RootSet, RootSet), value: u64) {
        self.min_dim_memo.write().unwrap().insert(key, value);
    }
}

fn norm_multiset(rs: &RootSystem, s: &RootSet) -> Vec<(i64, usize)> {
    let mut counts: HashMap<i64, usize> = HashMap::new();
    for i in s.iter() {
        *counts.entry(rs.norm4(i)).or_default() += 1;
    }
    let mut v: Vec<_> = counts.into_iter().collect();
    v.sort();
    v
}

/// Exact order of the Weyl group, by an orbit-stabilizer chain: the orbit of
/// the highest root of each irreducible component times the order of the
/// stabilizer, which is the parabolic orthogonal to it. No element listing.
pub fn group_order(rs: &RootSystem) -> Result<u64> {
    group_order_of_set(rs, &rs.full_set())
}

fn group_order_of_set(rs: &RootSystem, set: &RootSet) -> Result<u64> {
    let mut order: u64 = 1;
    for comp in subsystem::components(rs, set) {
        order *= irreducible_order(rs, &comp)?;
    }
    Ok(order)
}

fn irreducible_order(rs: &RootSystem, comp: &RootSet) -> Result<u64> {
    let base = subsystem::subsystem_base(rs, comp);
    // dominant roots: nonnegative inner product with every simple root
    let dominant: Vec<usize> = comp
        .iter()
        .filter(|&i| base.iter().all(|&b| rs.root(i).dot4(rs.root(b)) >= 0))
        .collect();
    let max_norm = dominant
        .iter()
        .map(|&i| rs.norm4(i))
        .max()
        .expect("irreducible component has a dominant root");
    let longest: Vec<usize> = dominant
        .into_iter()
        .filter(|&i| rs.norm4(i) == max_norm)
        .collect();
    assert_eq!(longest.len(), 1, "highest root is unique");
    let theta = longest[0];

    // orbit of the highest root as a vector under the component's reflections
    let mirrors: Vec<_> = base.iter().map(|&b| rs.root(b).clone()).collect();
    let mut seen = HashSet::new();
    seen.insert(rs.root(theta).clone());
    let mut frontier = vec![rs.root(theta).clone()];
    while let Some(v) = frontier.pop() {
        for m in &mirrors {
            let w = v.reflected(m);
            if !seen.contains(&w) {
                seen.insert(w.clone());
                frontier.push(w);
            }
        }
    }
    let orbit_len = seen.len() as u64;

    // stabilizer of the highest root: the parabolic on the orthogonal part
    // of the base
    let stab_base: Vec<usize> = base
        .iter()
        .copied()
        .filter(|&b| rs.root(b).dot4(rs.root(theta)) == 0)
        .collect();
    if stab_base.is_empty() {
        return Ok(orbit_len);
    }
    let span = IntSpan::from_vectors(rs.ambient_dim(), stab_base.iter().map(|&b| rs.root(b)));
    let sub: RootSet = comp.iter().filter(|&i| span.contains(rs.root(i))).collect();
    Ok(orbit_len * group_order_of_set(rs, &sub)?)
}

/// The Weyl orbit of a subsystem with its exact size; thin wrapper kept for
/// callers that do not hold a session.
pub fn orbit_of_subsystem(session: &Session, seed: &RootSet) -> Result<Arc<SubsystemOrbit>> {
    session.orbit(seed)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_system::Family;
    use crate::vector::ExactVector;

    /// Brute-force group order: closure of the generator permutations under
    /// composition. Independent of the orbit-stabilizer chain.
    fn brute_force_order(rs: &RootSystem, cap: usize) -> usize {
        let gens: Vec<Vec<u16>> = rs
            .base()
            .iter()
            .map(|&b| rs.reflection_perm(b as usize))
            .collect();
        let id: Vec<u16> = (0..rs.num_roots() as u16).collect();
        let mut seen: HashSet<Vec<u16>> = HashSet::new();
        seen.insert(id.clone());
        let mut frontier = vec![id];
        while let Some(p) = frontier.pop() {
            for g in &gens {
                let q: Vec<u16> = p.iter().map(|&i| g[i as usize]).collect();
                if seen.insert(q.clone()) {
                    assert!(seen.len() <= cap, "brute-force cap exceeded");
                    frontier.push(q);
                }
            }
        }
        seen.len()
    }

    #[test]
    fn generators_are_involutions() {
        for (family, rank) in [(Family::A, 2), (Family::F, 4), (Family::BC, 2)] {
            let rs = RootSystem::build(family, rank).unwrap();
            let gens = simple_reflections(&rs);
            assert_eq!(gens.len(), rank);
            for g in &gens {
                assert!(g.then(g).is_identity());
                // permutations commute with negation
                for i in 0..rs.num_roots() {
                    assert_eq!(
                        g.apply_index(rs.neg_index(i)),
                        rs.neg_index(g.apply_index(i))
                    );
                }
            }
        }
    }

    #[test]
    fn group_orders_match_brute_force() {
        for (family, rank, expected) in [
            (Family::A, 2, 6),
            (Family::G, 2, 12),
            (Family::BC, 2, 8),
            (Family::C, 3, 48),
            (Family::F, 4, 1152),
        ] {
            let rs = RootSystem::build(family, rank).unwrap();
            assert_eq!(brute_force_order(&rs, 2000), expected);
            assert_eq!(group_order(&rs).unwrap() as usize, expected, "{family:?}{rank}");
        }
    }

    #[test]
    fn big_orders_by_chain() {
        for (family, rank, expected) in [
            (Family::D, 4, 192u64),
            (Family::E, 6, 51_840),
            (Family::E, 7, 2_903_040),
            (Family::E, 8, 696_729_600),
        ] {
            let rs = RootSystem::build(family, rank).unwrap();
            assert_eq!(group_order(&rs).unwrap(), expected, "{family:?}{rank}");
        }
    }

    fn pair(rs: &RootSystem, coords: &[i64]) -> RootSet {
        let v = ExactVector::from_ints(coords);
        let i = rs.root_index(&v).unwrap();
        RootSet::from_indices([i, rs.neg_index(i)])
    }

    #[test]
    fn a1_orbit_in_a2_has_size_three() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let session = Session::new(&rs);
        let orbit = session.orbit(&pair(&rs, &[1, -1, 0])).unwrap();
        assert_eq!(orbit.size(), 3);
        assert_eq!(group_order(&rs).unwrap() % orbit.size() as u64, 0);
    }

    #[test]
    fn g2_long_and_short_a1_orbits_do_not_mix() {
        let rs = RootSystem::build(Family::G, 2).unwrap();
        let session = Session::new(&rs);
        let short = pair(&rs, &[1, -1, 0]);
        let long = pair(&rs, &[2, -1, -1]);
        let short_orbit = session.orbit(&short).unwrap();
        let long_orbit = session.orbit(&long).unwrap();
        assert_eq!(short_orbit.size(), 3);
        assert_eq!(long_orbit.size(), 3);
        assert!(!short_orbit.contains(&long));
        assert!(!long_orbit.contains(&short));
        assert!(!session.are_conjugate(&short, &long).unwrap());
    }

    #[test]
    fn c3_coordinate_pair_c2_orbit() {
        let rs = RootSystem::build(Family::C, 3).unwrap();
        let session = Session::new(&rs);
        let c2_on = |a: usize, b: usize| -> RootSet {
            let mut coords = vec![vec![0i64; 3], vec![0i64; 3], vec![0i64; 3], vec![0i64; 3]];
            coords[0][a] = 1;
            coords[0][b] = -1;
            coords[1][a] = 1;
            coords[1][b] = 1;
            coords[2][a] = 2;
            coords[3][b] = 2;
            let mut s = RootSet::EMPTY;
            for c in &coords {
                let i = rs.root_index(&ExactVector::from_ints(c)).unwrap();
                s.insert(i);
                s.insert(rs.neg_index(i));
            }
            s
        };
        let orbit = session.orbit(&c2_on(0, 1)).unwrap();
        assert_eq!(orbit.size(), 3);
        for (a, b) in [(0, 1), (0, 2), (1, 2)] {
            assert!(orbit.contains(&c2_on(a, b)));
        }
    }

    #[test]
    fn conjugacy_in_a2() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let session = Session::new(&rs);
        let s1 = pair(&rs, &[1, -1, 0]);
        let s2 = pair(&rs, &[0, 1, -1]);
        assert!(session.are_conjugate(&s1, &s2).unwrap());
        assert!(session.are_conjugate(&s1, &s1).unwrap());
    }

    #[test]
    fn orbit_resource_guard_reports() {
        let rs = RootSystem::build(Family::E, 6).unwrap();
        let session = Session::new(&rs).with_limits(Limits {
            max_orbit: 5,
            max_witness_checks: 1,
        });
        let a1 = pair(&rs, &[1, 1, 0, 0, 0, 0, 0, 0]);
        match session.orbit(&a1) {
            Err(Error::ResourceCeiling { what, .. }) => assert_eq!(what, "subsystem orbit"),
            other => panic!("expected resource ceiling, got {other:?}"),
        }
    }

    #[test]
    fn orbit_disk_cache_round_trip() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let dir = tempfile::tempdir().unwrap();
        let seed = pair(&rs, &[1, -1, 0]);
        let fresh = {
            let session = Session::new(&rs).with_cache_dir(Some(dir.path().to_path_buf()));
            session.orbit(&seed).unwrap().members.clone()
        };
        // a new session must read identical members back from disk
        let session = Session::new(&rs).with_cache_dir(Some(dir.path().to_path_buf()));
        let cached = session.orbit(&seed).unwrap();
        assert_eq!(cached.members, fresh);
    }

    #[test]
    fn orbit_invariants_constant() {
        let rs = RootSystem::build(Family::C, 3).unwrap();
        let session = Session::new(&rs);
        let a1c1: RootSet = {
            let a = rs.root_index(&ExactVector::from_ints(&[1, -1, 0])).unwrap();
            let c = rs.root_index(&ExactVector::from_ints(&[0, 0, 2])).unwrap();
            let mut s = RootSet::from_indices([a, c]);
            s = rs.negation_closure(&s);
            s
        };
        let orbit = session.orbit(&a1c1).unwrap();
        let t0 = subsystem::identify_type(&rs, &a1c1).unwrap();
        for m in &orbit.members {
            assert_eq!(subsystem::identify_type(&rs, m).unwrap(), t0);
            assert_eq!(m.len(), a1c1.len());
            assert_eq!(rs.weighted_dim(m), rs.weighted_dim(&a1c1));
        }
        assert_eq!(group_order(&rs).unwrap() % orbit.size() as u64, 0);
    }
}
