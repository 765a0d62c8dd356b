//! R-closed subsystem machinery.
//!
//! A subsystem is a negation-closed index set over a parent
//! [`RootSystem`]; it is R-closed when it equals the intersection of its
//! rational span with the full root set. The annihilators of nonzero
//! elements of the flat are exactly the R-closed subsystems cut out by
//! subspaces, and up to Weyl conjugacy each one is the closure of a subset
//! of the base. The catalog enumerates all `2^rank` base subsets, closes
//! them, and deduplicates by genuine conjugacy (orbit membership, not type
//! heuristics).

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::linalg::IntSpan;
use crate::root_system::{Family, LieType, RootSystem};
use crate::rootset::RootSet;
use crate::weyl::Session;

/// Intersection of the rational span of `seed` with the full root set.
///
/// Negation plays no role in a span, so the input need not be
/// negation-closed; the output always is. Idempotent and monotone.
pub fn r_closure(rs: &RootSystem, seed: &RootSet) -> RootSet {
    if seed.is_empty() {
        return RootSet::EMPTY;
    }
    let span = IntSpan::from_vectors(rs.ambient_dim(), seed.iter().map(|i| rs.root(i)));
    (0..rs.num_roots())
        .filter(|&i| span.contains(rs.root(i)))
        .collect()
}

/// Whether `set` is R-closed: `span(set) ∩ Φ = set`.
pub fn is_r_closed(rs: &RootSystem, set: &RootSet) -> bool {
    r_closure(rs, set) == *set
}

/// Connected components of the non-orthogonality graph on `set`.
pub fn components(rs: &RootSystem, set: &RootSet) -> Vec<RootSet> {
    let indices: Vec<usize> = set.iter().collect();
    let mut comp_id: HashMap<usize, usize> = HashMap::new();
    let mut comps: Vec<RootSet> = Vec::new();
    for &start in &indices {
        if comp_id.contains_key(&start) {
            continue;
        }
        let id = comps.len();
        let mut members = RootSet::EMPTY;
        let mut stack = vec![start];
        comp_id.insert(start, id);
        while let Some(i) = stack.pop() {
            members.insert(i);
            for &j in &indices {
                if !comp_id.contains_key(&j) && rs.root(i).dot4(rs.root(j)) != 0 {
                    comp_id.insert(j, id);
                    stack.push(j);
                }
            }
        }
        comps.push(members);
    }
    comps
}

/// Simple roots of a subsystem: positive members that are not the sum of two
/// positive members.
pub fn subsystem_base(rs: &RootSystem, set: &RootSet) -> Vec<usize> {
    let positives: Vec<usize> = set.and(rs.positive()).iter().collect();
    positives
        .iter()
        .copied()
        .filter(|&a| {
            !positives.iter().any(|&b| {
                if b == a {
                    return false;
                }
                let gamma = rs.root(a).sub(rs.root(b));
                rs.root_index(&gamma)
                    .map(|g| set.contains(g) && rs.is_positive(g))
                    .unwrap_or(false)
            })
        })
        .collect()
}

/// Multiplicity-weighted dimension: the sum of multiplicities over the
/// positive roots of the set.
pub fn dim_subsystem(rs: &RootSystem, set: &RootSet) -> u64 {
    rs.weighted_dim(set)
}

fn identify_component(rs: &RootSystem, comp: &RootSet) -> Result<(Family, usize)> {
    let rank = rs.span_rank(comp);
    let count = comp.len();
    let err = Error::UnrecognizedComponent { rank, count };

    let has_double = comp
        .iter()
        .any(|i| rs.double_index(i).map(|d| comp.contains(d)).unwrap_or(false));
    if has_double {
        if count == 2 * rank * (rank + 1) {
            return Ok((Family::BC, rank));
        }
        return Err(err);
    }

    match rank {
        0 => Err(err),
        1 => {
            if count != 2 {
                return Err(err);
            }
            // A pair of long roots in a C-type parent is conventionally C1
            // (the paper's naming for the EVII catalog); anything else is A1.
            let i = comp.iter().next().unwrap();
            if rs.family() == Family::C && rs.norm4(i) == 16 {
                Ok((Family::C, 1))
            } else {
                Ok((Family::A, 1))
            }
        }
        2 => match count {
            6 => Ok((Family::A, 2)),
            8 => {
                // B2 and C2 coincide; keep the parent's convention.
                if rs.family() == Family::C {
                    Ok((Family::C, 2))
                } else {
                    Ok((Family::B, 2))
                }
            }
            12 => Ok((Family::G, 2)),
            _ => Err(err),
        },
        r => {
            let max_norm = comp.iter().map(|i| rs.norm4(i)).max().unwrap();
            let long = comp.iter().filter(|&i| rs.norm4(i) == max_norm).count();
            let single_length = long == count;
            if count == r * (r + 1) {
                Ok((Family::A, r))
            } else if count == 2 * r * (r - 1) && single_length {
                // D3 is isomorphic to A3 and already caught above for r = 3.
                Ok((Family::D, r))
            } else if count == 2 * r * r && !single_length {
                // B6 and C6 share the root count 72 with E6 but have two
                // root lengths; E6 is simply laced.
                if long == 2 * r {
                    Ok((Family::C, r))
                } else {
                    Ok((Family::B, r))
                }
            } else {
                match (r, count) {
                    (4, 48) => Ok((Family::F, 4)),
                    (6, 72) | (7, 126) | (8, 240) if single_length => Ok((Family::E, r)),
                    _ => Err(err),
                }
            }
        }
    }
}

/// Lie type of an R-closed subsystem: decompose into irreducible components
/// and label each one.
pub fn identify_type(rs: &RootSystem, set: &RootSet) -> Result<LieType> {
    let mut factors = Vec::new();
    for comp in components(rs, set) {
        factors.push(identify_component(rs, &comp)?);
    }
    Ok(LieType::from_factors(factors))
}

/// One conjugacy class of annihilating root subsystems.
#[derive(Debug, Clone)]
pub struct AnnihilatorType {
    /// Canonical representative, the closure of `rep_mask`.
    pub rep: RootSet,
    /// Base subset (bit `j` = simple root `j`) realizing the representative.
    pub rep_mask: u16,
    pub lie_type: LieType,
    /// Unique label within the catalog; equal-type classes get an
    /// `a`/`b`/... suffix in canonical order, the empty class is `regular`.
    pub label: String,
    pub dim: u64,
    pub corank: usize,
}

/// All annihilator classes of a system, with the containment order.
pub struct AnnihilatorCatalog {
    pub classes: Vec<AnnihilatorType>,
    /// Class of each base-subset mask (the full mask is excluded).
    subset_class: HashMap<u16, usize>,
    /// `le[y][x]`: some conjugate of class `y` is contained in class `x`.
    le: Vec<Vec<bool>>,
}

impl AnnihilatorCatalog {
    pub fn class_by_label(&self, label: &str) -> Option<&AnnihilatorType> {
        self.classes.iter().find(|c| c.label == label)
    }

    pub fn class_index_of_subset(&self, mask: u16) -> Option<usize> {
        self.subset_class.get(&mask).copied()
    }

    /// Containment up to conjugacy, derived from the base-subset lattice.
    pub fn le(&self, y: usize, x: usize) -> bool {
        self.le[y][x]
    }

    /// Comparable pairs `(y, x)` with `y` strictly below `x`.
    pub fn comparable_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.classes.len();
        let mut out = Vec::new();
        for y in 0..n {
            for x in 0..n {
                if y != x && self.le[y][x] {
                    out.push((y, x));
                }
            }
        }
        out
    }

    /// Classes not contained in any other proper class.
    pub fn maximal_classes(&self) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&x| {
                (0..self.classes.len()).all(|z| z == x || !self.le[x][z])
            })
            .collect()
    }

    /// The corank-one classes, i.e. the Ψ ranged over by the Wright criterion.
    pub fn corank_one(&self) -> Vec<&AnnihilatorType> {
        self.classes.iter().filter(|c| c.corank == 1).collect()
    }
}

/// Enumerates the annihilator classes of the session's system: the closures
/// of all proper base subsets, deduplicated by Weyl conjugacy.
pub fn annihilator_catalog(session: &Session) -> Result<AnnihilatorCatalog> {
    let rs = session.rs();
    let rank = rs.rank();
    let full_mask: u16 = ((1u32 << rank) - 1) as u16;

    let closure_of_mask = |mask: u16| -> RootSet {
        let seed: RootSet = rs
            .base()
            .iter()
            .enumerate()
            .filter(|&(j, _)| mask & (1 << j) != 0)
            .map(|(_, &b)| b as usize)
            .collect();
        r_closure(rs, &seed)
    };

    // Group subsets into conjugacy classes; invariants first, orbits to confirm.
    struct Raw {
        mask: u16,
        set: RootSet,
        lie_type: LieType,
        dim: u64,
        corank: usize,
    }
    let mut raws: Vec<Raw> = Vec::new();
    for mask in 0..full_mask {
        let set = closure_of_mask(mask);
        let lie_type = identify_type(rs, &set)?;
        raws.push(Raw {
            mask,
            set,
            lie_type,
            dim: dim_subsystem(rs, &set),
            corank: rank - rs.span_rank(&set),
        });
    }

    let mut class_reps: Vec<usize> = Vec::new(); // indices into raws
    let mut subset_class: HashMap<u16, usize> = HashMap::new();
    for i in 0..raws.len() {
        let mut assigned = None;
        for (ci, &ri) in class_reps.iter().enumerate() {
            let rep = &raws[ri];
            if rep.lie_type == raws[i].lie_type
                && rep.dim == raws[i].dim
                && rep.set.len() == raws[i].set.len()
                && session.are_conjugate(&rep.set, &raws[i].set)?
            {
                assigned = Some(ci);
                break;
            }
        }
        let ci = assigned.unwrap_or_else(|| {
            class_reps.push(i);
            class_reps.len() - 1
        });
        subset_class.insert(raws[i].mask, ci);
    }

    // Canonical class order: rank of the subsystem, then type label, then
    // dim, then representative. Matches the report ordering.
    let mut order: Vec<usize> = (0..class_reps.len()).collect();
    order.sort_by(|&a, &b| {
        let (ra, rb) = (&raws[class_reps[a]], &raws[class_reps[b]]);
        (rank - ra.corank, ra.lie_type.label(), ra.dim, ra.set).cmp(&(
            rank - rb.corank,
            rb.lie_type.label(),
            rb.dim,
            rb.set,
        ))
    });
    let renumber: HashMap<usize, usize> = order
        .iter()
        .enumerate()
        .map(|(new, &old)| (old, new))
        .collect();
    for v in subset_class.values_mut() {
        *v = renumber[v];
    }

    // Labels, with deterministic suffixes where a type occurs in several
    // classes (short vs long A1 in G2 or F4, the paired Levi classes of E7/E8).
    let mut classes: Vec<AnnihilatorType> = order
        .iter()
        .map(|&old| {
            let raw = &raws[class_reps[old]];
            AnnihilatorType {
                rep: raw.set,
                rep_mask: raw.mask,
                lie_type: raw.lie_type.clone(),
                label: String::new(),
                dim: raw.dim,
                corank: raw.corank,
            }
        })
        .collect();
    let mut by_type: HashMap<String, Vec<usize>> = HashMap::new();
    for (i, c) in classes.iter().enumerate() {
        by_type.entry(c.lie_type.label()).or_default().push(i);
    }
    for (base_label, members) in by_type {
        for (k, &i) in members.iter().enumerate() {
            classes[i].label = if classes[i].lie_type.is_empty() {
                "regular".to_string()
            } else if members.len() == 1 {
                base_label.clone()
            } else {
                format!("{}{}", base_label, (b'a' + k as u8) as char)
            };
        }
    }

    // Containment order from the subset lattice: y ≤ x iff some subset of an
    // x-realizing mask closes to class y.
    let n = classes.len();
    let mut le = vec![vec![false; n]; n];
    for (&mask, &cx) in &subset_class {
        let mut sub = mask;
        loop {
            le[subset_class[&sub]][cx] = true;
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & mask;
        }
    }

    Ok(AnnihilatorCatalog {
        classes,
        subset_class,
        le,
    })
}

/// The corank-one closed classes computed directly from the base positions:
/// for each `j`, the closure of the base with `α_j` removed, deduplicated up
/// to conjugacy. Agrees with filtering the catalog by corank one.
pub fn corank_one_closed(session: &Session) -> Result<Vec<AnnihilatorType>> {
    let catalog = annihilator_catalog(session)?;
    Ok(catalog
        .corank_one()
        .into_iter()
        .cloned()
        .collect())
}
