//! Construction of restricted root systems with exact arithmetic.
//!
//! Supported families: A, B, C, D, BC (non-reduced), E6, E7, E8, F4, G2, all
//! in their standard Euclidean coordinate models. E6 and E7 are realized
//! inside the E8 ambient space as the roots orthogonal to one resp. two
//! fixed vectors, which reproduces the usual coordinate bases.
//!
//! Positivity is decided by the sign of the first nonzero coefficient in the
//! base expansion; for a genuine base the coefficients of a root are all
//! nonnegative or all nonpositive, and the constructor checks this.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{solve_integral, IntSpan};
use crate::rootset::RootSet;
use crate::vector::ExactVector;

/// Root-system family label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    BC,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(&self) -> &'static str {
        match self {
            Family::A => "A",
            Family::B => "B",
            Family::BC => "BC",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        }
    }

    pub fn parse(s: &str) -> Option<(Family, usize)> {
        let (fam, rank) = if let Some(r) = s.strip_prefix("BC") {
            (Family::BC, r)
        } else {
            let (head, tail) = s.split_at(1);
            let fam = match head {
                "A" => Family::A,
                "B" => Family::B,
                "C" => Family::C,
                "D" => Family::D,
                "E" => Family::E,
                "F" => Family::F,
                "G" => Family::G,
                _ => return None,
            };
            (fam, tail)
        };
        rank.parse().ok().map(|r| (fam, r))
    }
}

/// A (possibly reducible) Lie type: a multiset of irreducible factors.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct LieType {
    factors: Vec<(Family, usize)>,
}

impl LieType {
    pub fn empty() -> Self {
        LieType { factors: Vec::new() }
    }

    pub fn simple(family: Family, rank: usize) -> Self {
        LieType {
            factors: vec![(family, rank)],
        }
    }

    pub fn from_factors(mut factors: Vec<(Family, usize)>) -> Self {
        factors.sort();
        LieType { factors }
    }

    pub fn factors(&self) -> &[(Family, usize)] {
        &self.factors
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|&(_, r)| r).sum()
    }

    /// Canonical token such as `A1`, `BC1` or `A1xC1`; `0` for the empty type.
    pub fn label(&self) -> String {
        if self.factors.is_empty() {
            return "0".to_string();
        }
        self.factors
            .iter()
            .map(|(f, r)| format!("{}{}", f.letter(), r))
            .collect::<Vec<_>>()
            .join("x")
    }

    /// Parses the canonical token format produced by [`LieType::label`].
    pub fn parse(s: &str) -> Option<LieType> {
        if s == "0" {
            return Some(LieType::empty());
        }
        let mut factors = Vec::new();
        for part in s.split('x') {
            factors.push(Family::parse(part)?);
        }
        Some(LieType::from_factors(factors))
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// A class of roots sharing squared length (and, in BC systems, the
/// distinction between a root and its double).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootClass {
    /// Exact squared length (an integer in every supported model).
    pub norm_sq: i64,
    /// True when the roots of this class are doubles of other roots.
    pub is_double: bool,
}

/// Multiplicity pattern keyed by squared root length.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicityPattern {
    entries: Vec<(i64, u32)>,
}

impl MultiplicityPattern {
    pub fn uniform(m: u32) -> Self {
        MultiplicityPattern { entries: vec![] }.with_uniform(m)
    }

    fn with_uniform(mut self, m: u32) -> Self {
        self.entries = vec![(0, m)]; // squared length 0 marks "all classes"
        self
    }

    /// Pattern assigning a multiplicity per squared length, e.g. for the
    /// BC2 pattern `(e_i±e_j: 6, e_i: 8, 2e_i: 1)` use `[(2, 6), (1, 8), (4, 1)]`.
    pub fn by_norm_sq(entries: &[(i64, u32)]) -> Self {
        MultiplicityPattern {
            entries: entries.to_vec(),
        }
    }

    fn is_uniform(&self) -> Option<u32> {
        match self.entries.as_slice() {
            [(0, m)] => Some(*m),
            _ => None,
        }
    }

    pub fn entries(&self) -> &[(i64, u32)] {
        &self.entries
    }
}

/// A root system: roots, base, positivity, multiplicities.
#[derive(Clone)]
pub struct RootSystem {
    lie_type: LieType,
    ambient_dim: usize,
    roots: Vec<ExactVector>,
    index: HashMap<ExactVector, u16>,
    neg: Vec<u16>,
    double: Vec<Option<u16>>,
    positive: RootSet,
    base: Vec<u16>,
    /// Base expansion of every root; integral for all supported systems.
    coeffs: Vec<Vec<i64>>,
    mult: Vec<u32>,
    norm4s: Vec<i64>,
    /// Per base position `j`: the roots whose `j`-th base coefficient is nonzero.
    coeff_nonzero: Vec<RootSet>,
}

/// Raw coordinate data per family.
fn raw_roots(family: Family, rank: usize) -> Result<(usize, Vec<ExactVector>, Vec<ExactVector>)> {
    let invalid = || Error::InvalidSystem {
        family: family.letter().to_string(),
        rank,
    };
    let ok_rank = match family {
        Family::A | Family::B | Family::C | Family::BC => (1..=8).contains(&rank),
        Family::D => (2..=8).contains(&rank),
        Family::E => (6..=8).contains(&rank),
        Family::F => rank == 4,
        Family::G => rank == 2,
    };
    if !ok_rank {
        return Err(invalid());
    }

    let e = |dim: usize, i: usize| {
        let mut v = vec![0i64; dim];
        v[i] = 1;
        ExactVector::from_ints(&v)
    };

    let mut roots = Vec::new();
    let mut base = Vec::new();
    let dim;
    match family {
        Family::A => {
            dim = rank + 1;
            for i in 0..dim {
                for j in 0..dim {
                    if i != j {
                        roots.push(e(dim, i).sub(&e(dim, j)));
                    }
                }
            }
            for i in 0..rank {
                base.push(e(dim, i).sub(&e(dim, i + 1)));
            }
        }
        Family::B | Family::C | Family::BC | Family::D => {
            dim = rank;
            for i in 0..dim {
                for j in i + 1..dim {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(e(dim, i).scaled(si).add(&e(dim, j).scaled(sj)));
                    }
                }
            }
            let short = matches!(family, Family::B | Family::BC);
            let long = matches!(family, Family::C | Family::BC);
            for i in 0..dim {
                if short {
                    roots.push(e(dim, i));
                    roots.push(e(dim, i).negated());
                }
                if long {
                    roots.push(e(dim, i).scaled(2));
                    roots.push(e(dim, i).scaled(-2));
                }
            }
            for i in 0..rank.saturating_sub(1) {
                base.push(e(dim, i).sub(&e(dim, i + 1)));
            }
            match family {
                Family::B | Family::BC => base.push(e(dim, rank - 1)),
                Family::C => base.push(e(dim, rank - 1).scaled(2)),
                Family::D => base.push(e(dim, rank - 2).add(&e(dim, rank - 1))),
                _ => unreachable!(),
            }
        }
        Family::G => {
            dim = 3;
            for i in 0..3 {
                for j in 0..3 {
                    if i != j {
                        roots.push(e(dim, i).sub(&e(dim, j)));
                    }
                }
            }
            for (i, j, k) in [(0, 1, 2), (1, 0, 2), (2, 0, 1)] {
                let v = e(dim, i).scaled(2).sub(&e(dim, j)).sub(&e(dim, k));
                roots.push(v.negated());
                roots.push(v);
            }
            base.push(e(dim, 0).sub(&e(dim, 1)));
            base.push(e(dim, 0).scaled(-2).add(&e(dim, 1)).add(&e(dim, 2)));
        }
        Family::F => {
            dim = 4;
            for i in 0..4 {
                roots.push(e(dim, i));
                roots.push(e(dim, i).negated());
                for j in i + 1..4 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(e(dim, i).scaled(si).add(&e(dim, j).scaled(sj)));
                    }
                }
            }
            for signs in 0..16u32 {
                let half: Vec<i64> = (0..4)
                    .map(|i| if signs & (1 << i) != 0 { -1 } else { 1 })
                    .collect();
                roots.push(ExactVector::from_doubled(half));
            }
            base.push(e(dim, 1).sub(&e(dim, 2)));
            base.push(e(dim, 2).sub(&e(dim, 3)));
            base.push(e(dim, 3));
            base.push(ExactVector::from_doubled(vec![1, -1, -1, -1]));
        }
        Family::E => {
            dim = 8;
            let mut e8 = Vec::new();
            for i in 0..8 {
                for j in i + 1..8 {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        e8.push(e(dim, i).scaled(si).add(&e(dim, j).scaled(sj)));
                    }
                }
            }
            for signs in 0..256u32 {
                if signs.count_ones() % 2 == 0 {
                    let half: Vec<i64> = (0..8)
                        .map(|i| if signs & (1 << i) != 0 { -1 } else { 1 })
                        .collect();
                    e8.push(ExactVector::from_doubled(half));
                }
            }
            // E7 is orthogonal to e7+e8, E6 additionally to e6+e8.
            let walls: Vec<ExactVector> = match rank {
                8 => vec![],
                7 => vec![e(dim, 6).add(&e(dim, 7))],
                6 => vec![e(dim, 6).add(&e(dim, 7)), e(dim, 5).add(&e(dim, 7))],
                _ => unreachable!(),
            };
            roots = e8
                .into_iter()
                .filter(|r| walls.iter().all(|w| r.dot4(w) == 0))
                .collect();
            let mut half1 = vec![-1i64; 8];
            half1[0] = 1;
            half1[7] = 1;
            base.push(ExactVector::from_doubled(half1));
            base.push(e(dim, 0).add(&e(dim, 1)));
            for i in 0..rank - 2 {
                base.push(e(dim, i + 1).sub(&e(dim, i)));
            }
        }
    }
    Ok((dim, roots, base))
}

impl RootSystem {
    /// Builds the full root system of the given family and rank, with a fixed
    /// standard base and all multiplicities one.
    pub fn build(family: Family, rank: usize) -> Result<RootSystem> {
        let (ambient_dim, mut roots, base_vecs) = raw_roots(family, rank)?;
        roots.sort();
        roots.dedup();

        let index: HashMap<ExactVector, u16> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.clone(), i as u16))
            .collect();
        assert_eq!(index.len(), roots.len(), "duplicate roots after dedup");
        assert!(roots.len() <= RootSet::CAPACITY);

        let neg: Vec<u16> = roots.iter().map(|r| index[&r.negated()]).collect();
        let double: Vec<Option<u16>> = roots
            .iter()
            .map(|r| index.get(&r.scaled(2)).copied())
            .collect();

        let base: Vec<u16> = base_vecs.iter().map(|b| index[b]).collect();
        assert_eq!(base.len(), rank);

        // Exact base expansion through the Gram matrix.
        let gram: Vec<Vec<i128>> = base_vecs
            .iter()
            .map(|a| base_vecs.iter().map(|b| a.dot4(b) as i128).collect())
            .collect();
        let mut coeffs = Vec::with_capacity(roots.len());
        for r in &roots {
            let rhs: Vec<i128> = base_vecs.iter().map(|b| r.dot4(b) as i128).collect();
            let c = solve_integral(&gram, &rhs).expect("base is linearly independent");
            coeffs.push(c);
        }

        let mut positive = RootSet::EMPTY;
        for (i, c) in coeffs.iter().enumerate() {
            let first = c.iter().find(|&&x| x != 0).copied().unwrap_or(0);
            assert_ne!(first, 0, "zero root");
            let all_same_sign = c.iter().all(|&x| x == 0 || x.signum() == first.signum());
            assert!(all_same_sign, "base does not define a positivity order");
            if first > 0 {
                positive.insert(i);
            }
        }

        let norm4s: Vec<i64> = roots.iter().map(|r| r.norm4()).collect();
        let mult = vec![1u32; roots.len()];

        let coeff_nonzero = (0..rank)
            .map(|j| {
                (0..roots.len())
                    .filter(|&i| coeffs[i][j] != 0)
                    .collect::<RootSet>()
            })
            .collect();

        let rs = RootSystem {
            lie_type: LieType::simple(family, rank),
            ambient_dim,
            roots,
            index,
            neg,
            double,
            positive,
            base,
            coeffs,
            mult,
            norm4s,
            coeff_nonzero,
        };
        debug_assert_eq!(rs.positive.len() * 2, rs.roots.len());
        Ok(rs)
    }

    /// Returns a copy with the multiplicity map populated from `pattern`.
    pub fn attach_multiplicities(&self, pattern: &MultiplicityPattern) -> Result<RootSystem> {
        let mut rs = self.clone();
        if let Some(m) = pattern.is_uniform() {
            rs.mult = vec![m; rs.roots.len()];
            return Ok(rs);
        }
        let classes = rs.root_classes();
        for &(norm_sq, _) in pattern.entries() {
            if !classes.iter().any(|c| c.norm_sq == norm_sq) {
                return Err(Error::UnknownRootClass(norm_sq));
            }
        }
        for class in &classes {
            if !pattern.entries().iter().any(|&(n, _)| n == class.norm_sq) {
                return Err(Error::UnassignedRootClass(class.norm_sq));
            }
        }
        for i in 0..rs.roots.len() {
            let norm_sq = rs.norm4s[i] / 4;
            let m = pattern
                .entries()
                .iter()
                .find(|&&(n, _)| n == norm_sq)
                .map(|&(_, m)| m)
                .unwrap();
            rs.mult[i] = m;
        }
        Ok(rs)
    }

    /// The distinct root classes, ordered by increasing squared length.
    pub fn root_classes(&self) -> Vec<RootClass> {
        let mut seen: Vec<RootClass> = Vec::new();
        for i in 0..self.roots.len() {
            let n4 = self.norm4s[i];
            assert_eq!(n4 % 4, 0, "root with non-integral squared length");
            let norm_sq = n4 / 4;
            if seen.iter().any(|c| c.norm_sq == norm_sq) {
                continue;
            }
            let is_double = halve(&self.roots[i])
                .map(|h| self.index.contains_key(&h))
                .unwrap_or(false);
            seen.push(RootClass { norm_sq, is_double });
        }
        seen.sort_by_key(|c| c.norm_sq);
        seen
    }

    pub fn lie_type(&self) -> &LieType {
        &self.lie_type
    }

    pub fn family(&self) -> Family {
        self.lie_type.factors()[0].0
    }

    pub fn rank(&self) -> usize {
        self.base.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn num_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &ExactVector {
        &self.roots[i]
    }

    pub fn roots(&self) -> &[ExactVector] {
        &self.roots
    }

    pub fn root_index(&self, v: &ExactVector) -> Option<usize> {
        self.index.get(v).map(|&i| i as usize)
    }

    pub fn neg_index(&self, i: usize) -> usize {
        self.neg[i] as usize
    }

    pub fn double_index(&self, i: usize) -> Option<usize> {
        self.double[i].map(|d| d as usize)
    }

    pub fn positive(&self) -> &RootSet {
        &self.positive
    }

    pub fn is_positive(&self, i: usize) -> bool {
        self.positive.contains(i)
    }

    pub fn base(&self) -> &[u16] {
        &self.base
    }

    pub fn multiplicity(&self, i: usize) -> u32 {
        self.mult[i]
    }

    pub fn all_mult_one(&self) -> bool {
        self.mult.iter().all(|&m| m == 1)
    }

    pub fn norm4(&self, i: usize) -> i64 {
        self.norm4s[i]
    }

    /// Base expansion coefficients of root `i`.
    pub fn base_coeffs(&self, i: usize) -> &[i64] {
        &self.coeffs[i]
    }

    /// Roots whose `j`-th base coefficient is nonzero, as a set.
    pub fn coeff_nonzero_mask(&self, j: usize) -> &RootSet {
        &self.coeff_nonzero[j]
    }

    /// Reflection of an arbitrary vector in the hyperplane of root `mirror`.
    pub fn reflect(&self, mirror: usize, target: &ExactVector) -> ExactVector {
        target.reflected(&self.roots[mirror])
    }

    /// The permutation of root indices induced by the reflection in root `m`.
    pub fn reflection_perm(&self, m: usize) -> Vec<u16> {
        let mirror = &self.roots[m];
        self.roots
            .iter()
            .map(|r| self.index[&r.reflected(mirror)])
            .collect()
    }

    /// Whether the positive root `root` has a nonzero coefficient on the
    /// `j`-th simple root, i.e. lies outside the span of the other simple roots.
    pub fn base_coefficient_nonzero(&self, root: usize, j: usize) -> Result<bool> {
        if !self.is_positive(root) {
            return Err(Error::NotPositiveRoot(root));
        }
        Ok(self.coeffs[root][j] != 0)
    }

    /// Multiplicity-weighted dimension of a negation-closed index set: the sum
    /// of multiplicities over its positive members.
    pub fn weighted_dim(&self, set: &RootSet) -> u64 {
        set.and(&self.positive)
            .iter()
            .map(|i| self.mult[i] as u64)
            .sum()
    }

    /// Dimension of the whole system.
    pub fn dim(&self) -> u64 {
        self.weighted_dim(&self.full_set())
    }

    pub fn full_set(&self) -> RootSet {
        (0..self.roots.len()).collect()
    }

    pub fn is_negation_closed(&self, set: &RootSet) -> bool {
        set.iter().all(|i| set.contains(self.neg_index(i)))
    }

    /// Closes a set under negation.
    pub fn negation_closure(&self, set: &RootSet) -> RootSet {
        let mut out = *set;
        for i in set.iter() {
            out.insert(self.neg_index(i));
        }
        out
    }

    /// Exact rank of the span of a set of roots.
    pub fn span_rank(&self, set: &RootSet) -> usize {
        IntSpan::from_vectors(self.ambient_dim, set.iter().map(|i| &self.roots[i])).rank()
    }

    /// Stable identifier used as an orbit-cache key. Orbits do not depend on
    /// multiplicities, so systems sharing a coordinate model share cache entries.
    pub fn system_key(&self) -> String {
        self.lie_type.label()
    }
}

fn halve(v: &ExactVector) -> Option<ExactVector> {
    if v.doubled().iter().all(|c| c % 2 == 0) {
        Some(ExactVector::from_doubled(
            v.doubled().iter().map(|c| c / 2).collect(),
        ))
    } else {
        None
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootSystem({}, {} roots, rank {})",
            self.lie_type,
            self.roots.len(),
            self.rank()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Brute-force oracle: closure of a seed set of vectors under all mutual
    /// reflections. Independent of the table-driven construction above.
    fn reflection_closure(seed: &[ExactVector]) -> Vec<ExactVector> {
        let mut all: Vec<ExactVector> = seed.to_vec();
        for v in seed {
            all.push(v.negated());
        }
        all.sort();
        all.dedup();
        loop {
            let mut new = Vec::new();
            for m in &all {
                for v in &all {
                    let r = v.reflected(m);
                    if !all.contains(&r) && !new.contains(&r) {
                        new.push(r);
                    }
                }
            }
            if new.is_empty() {
                break;
            }
            all.extend(new);
            all.sort();
            all.dedup();
        }
        all
    }

    #[test]
    fn a2_matches_brute_force_closure() {
        let seed = vec![
            ExactVector::from_ints(&[1, -1, 0]),
            ExactVector::from_ints(&[0, 1, -1]),
        ];
        let oracle = reflection_closure(&seed);
        assert_eq!(oracle.len(), 6);

        let rs = RootSystem::build(Family::A, 2).unwrap();
        assert_eq!(rs.num_roots(), 6);
        assert_eq!(rs.positive().len(), 3);
        let mut built: Vec<_> = rs.roots().to_vec();
        built.sort();
        assert_eq!(built, oracle);
    }

    #[test]
    fn e8_has_240_roots_120_positive() {
        let rs = RootSystem::build(Family::E, 8).unwrap();
        assert_eq!(rs.num_roots(), 240);
        assert_eq!(rs.positive().len(), 120);
        // dim G/K - rank for EVIII: 128 - 8
        assert_eq!(rs.dim(), 120);
    }

    #[test]
    fn bc2_positive_roots_by_direct_construction() {
        let rs = RootSystem::build(Family::BC, 2).unwrap();
        assert_eq!(rs.num_roots(), 12);
        let expected: Vec<ExactVector> = vec![
            ExactVector::from_ints(&[1, -1]),
            ExactVector::from_ints(&[1, 1]),
            ExactVector::from_ints(&[1, 0]),
            ExactVector::from_ints(&[0, 1]),
            ExactVector::from_ints(&[2, 0]),
            ExactVector::from_ints(&[0, 2]),
        ];
        for v in &expected {
            let i = rs.root_index(v).expect("root present");
            assert!(rs.is_positive(i), "{v:?} should be positive");
        }
        assert_eq!(rs.positive().len(), 6);
    }

    #[test]
    fn g2_counts() {
        let rs = RootSystem::build(Family::G, 2).unwrap();
        assert_eq!(rs.num_roots(), 12);
        assert_eq!(rs.positive().len(), 6);
        // 6 = 8 - 2 from the catalog row for type G
        assert_eq!(rs.dim(), 6);
    }

    #[test]
    fn family_sizes() {
        for (family, rank, count) in [
            (Family::A, 1, 2),
            (Family::A, 5, 30),
            (Family::B, 3, 18),
            (Family::C, 3, 18),
            (Family::C, 1, 2),
            (Family::D, 4, 24),
            (Family::D, 5, 40),
            (Family::BC, 1, 4),
            (Family::E, 6, 72),
            (Family::E, 7, 126),
            (Family::F, 4, 48),
        ] {
            let rs = RootSystem::build(family, rank).unwrap();
            assert_eq!(rs.num_roots(), count, "{family:?}{rank}");
            assert_eq!(rs.positive().len() * 2, count);
        }
    }

    #[test]
    fn invalid_pairs_rejected() {
        assert!(RootSystem::build(Family::E, 5).is_err());
        assert!(RootSystem::build(Family::F, 3).is_err());
        assert!(RootSystem::build(Family::G, 3).is_err());
        assert!(RootSystem::build(Family::A, 0).is_err());
        assert!(RootSystem::build(Family::A, 9).is_err());
    }

    #[test]
    fn reflection_closure_invariant_all_systems() {
        for (family, rank) in [
            (Family::A, 2),
            (Family::BC, 1),
            (Family::BC, 2),
            (Family::C, 3),
            (Family::D, 4),
            (Family::F, 4),
            (Family::G, 2),
            (Family::E, 6),
        ] {
            let rs = RootSystem::build(family, rank).unwrap();
            for m in 0..rs.num_roots() {
                for i in 0..rs.num_roots() {
                    let img = rs.reflect(m, rs.root(i));
                    assert!(
                        rs.root_index(&img).is_some(),
                        "{family:?}{rank}: reflection escapes the root set"
                    );
                }
            }
        }
    }

    #[test]
    fn negation_symmetry_and_multiplicity_symmetry() {
        let rs = RootSystem::build(Family::BC, 2)
            .unwrap()
            .attach_multiplicities(&MultiplicityPattern::by_norm_sq(&[(2, 6), (1, 8), (4, 1)]))
            .unwrap();
        for i in 0..rs.num_roots() {
            let n = rs.neg_index(i);
            assert_eq!(rs.root(n), &rs.root(i).negated());
            assert_eq!(rs.multiplicity(i), rs.multiplicity(n));
            assert_ne!(rs.is_positive(i), rs.is_positive(n));
        }
    }

    #[test]
    fn eiii_pattern_dimension() {
        // (e_i±e_j: 6, e_i: 8, 2e_i: 1) gives dim 30; 30 + rank 2 = 32 = dim G/K
        let rs = RootSystem::build(Family::BC, 2)
            .unwrap()
            .attach_multiplicities(&MultiplicityPattern::by_norm_sq(&[(2, 6), (1, 8), (4, 1)]))
            .unwrap();
        assert_eq!(rs.dim(), 30);
    }

    #[test]
    fn evii_pattern_dimension() {
        let rs = RootSystem::build(Family::C, 3)
            .unwrap()
            .attach_multiplicities(&MultiplicityPattern::by_norm_sq(&[(2, 8), (4, 1)]))
            .unwrap();
        assert_eq!(rs.dim(), 51);
    }

    #[test]
    fn e6_uniform_dimension() {
        let rs = RootSystem::build(Family::E, 6).unwrap();
        assert_eq!(rs.dim(), 36);
    }

    #[test]
    fn pattern_validation() {
        let rs = RootSystem::build(Family::BC, 2).unwrap();
        // unknown class
        assert!(rs
            .attach_multiplicities(&MultiplicityPattern::by_norm_sq(&[
                (2, 6),
                (1, 8),
                (4, 1),
                (3, 9)
            ]))
            .is_err());
        // missing class
        assert!(rs
            .attach_multiplicities(&MultiplicityPattern::by_norm_sq(&[(2, 6), (1, 8)]))
            .is_err());
    }

    #[test]
    fn reflect_examples() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let a = rs
            .root_index(&ExactVector::from_ints(&[1, -1, 0]))
            .unwrap();
        // s_alpha(alpha) = -alpha
        assert_eq!(rs.reflect(a, rs.root(a)), rs.root(a).negated());
        // s_{e1-e2}(e2-e3) = e1-e3
        let b = ExactVector::from_ints(&[0, 1, -1]);
        assert_eq!(rs.reflect(a, &b), ExactVector::from_ints(&[1, 0, -1]));
        // involution
        assert_eq!(rs.reflect(a, &rs.reflect(a, &b)), b);
    }

    #[test]
    fn base_coefficients() {
        let rs = RootSystem::build(Family::A, 2).unwrap();
        let highest = rs
            .root_index(&ExactVector::from_ints(&[1, 0, -1]))
            .unwrap();
        assert!(rs.base_coefficient_nonzero(highest, 0).unwrap());
        assert!(rs.base_coefficient_nonzero(highest, 1).unwrap());
        let alpha2 = rs
            .root_index(&ExactVector::from_ints(&[0, 1, -1]))
            .unwrap();
        assert!(!rs.base_coefficient_nonzero(alpha2, 0).unwrap());
        // negative roots are rejected
        let neg = rs.neg_index(highest);
        assert!(rs.base_coefficient_nonzero(neg, 0).is_err());
    }

    #[test]
    fn e6_highest_root_supported_everywhere() {
        let rs = RootSystem::build(Family::E, 6).unwrap();
        // brute-force: the positive root whose coefficient vector dominates all others
        let mut best = None;
        for i in rs.positive().iter() {
            let better = match best {
                None => true,
                Some(b) => {
                    let cb = rs.base_coeffs(b);
                    rs.base_coeffs(i).iter().zip(cb).all(|(x, y)| x >= y)
                }
            };
            if better {
                best = Some(i);
            }
        }
        let highest = best.unwrap();
        for j in 0..rs.rank() {
            assert!(rs.base_coefficient_nonzero(highest, j).unwrap());
        }
    }

    #[test]
    fn root_classes_detected() {
        let rs = RootSystem::build(Family::BC, 2).unwrap();
        let classes = rs.root_classes();
        assert_eq!(
            classes.iter().map(|c| c.norm_sq).collect::<Vec<_>>(),
            vec![1, 2, 4]
        );
        assert!(classes[2].is_double);
        assert!(!classes[1].is_double);

        let rs = RootSystem::build(Family::C, 3).unwrap();
        let classes = rs.root_classes();
        assert_eq!(
            classes.iter().map(|c| c.norm_sq).collect::<Vec<_>>(),
            vec![2, 4]
        );
        assert!(!classes[1].is_double); // e_i is not a root of C3
    }
}
