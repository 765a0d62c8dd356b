//! Reference data for the twelve exceptional Riemannian symmetric spaces of
//! noncompact type: Cartan label, absolute and restricted root systems, rank,
//! dimension, restricted-root multiplicities where available, and the known
//! classification answers the computation is compared against.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::root_system::{Family, LieType, MultiplicityPattern, RootSystem};

/// Cartan labels in their standard order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum SpaceLabel {
    EI,
    EII,
    EIII,
    EIV,
    EV,
    EVI,
    EVII,
    EVIII,
    EIX,
    FI,
    FII,
    G,
}

impl SpaceLabel {
    pub const ALL: [SpaceLabel; 12] = [
        SpaceLabel::EI,
        SpaceLabel::EII,
        SpaceLabel::EIII,
        SpaceLabel::EIV,
        SpaceLabel::EV,
        SpaceLabel::EVI,
        SpaceLabel::EVII,
        SpaceLabel::EVIII,
        SpaceLabel::EIX,
        SpaceLabel::FI,
        SpaceLabel::FII,
        SpaceLabel::G,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SpaceLabel::EI => "EI",
            SpaceLabel::EII => "EII",
            SpaceLabel::EIII => "EIII",
            SpaceLabel::EIV => "EIV",
            SpaceLabel::EV => "EV",
            SpaceLabel::EVI => "EVI",
            SpaceLabel::EVII => "EVII",
            SpaceLabel::EVIII => "EVIII",
            SpaceLabel::EIX => "EIX",
            SpaceLabel::FI => "FI",
            SpaceLabel::FII => "FII",
            SpaceLabel::G => "G",
        }
    }

    pub fn parse(s: &str) -> Option<SpaceLabel> {
        SpaceLabel::ALL.iter().copied().find(|l| l.as_str() == s)
    }
}

impl std::fmt::Display for SpaceLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How the reference value of L(G) was established.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LgProvenance {
    /// Combinatorial sufficient condition, recomputed by this crate.
    Wright,
    /// Transport along an embedding of symmetric spaces; reference data only.
    Embedding,
    /// All nonzero elements are regular and products of regular elements are
    /// absolutely continuous; reference data.
    Regularity,
}

/// One table row.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceDescriptor {
    pub label: SpaceLabel,
    pub absolute_type: LieType,
    pub restricted_type: LieType,
    pub rank: usize,
    /// Dimension of G/K.
    pub dim_gk: u64,
    /// Multiplicity pattern of the restricted roots; `None` where the
    /// classification was settled by embedding and the data is not needed.
    pub multiplicities: Option<MultiplicityPattern>,
    /// Annihilator types with L_X = 3; every other type has L_X = 2.
    pub lx_exceptions: Vec<LieType>,
    /// Reference L(G).
    pub lg: u8,
    pub lg_provenance: LgProvenance,
}

impl SpaceDescriptor {
    /// Builds the restricted root system with multiplicities attached.
    pub fn build_restricted(&self) -> Result<RootSystem> {
        let pattern = self
            .multiplicities
            .as_ref()
            .ok_or_else(|| Error::MultiplicitiesUnavailable(self.label.to_string()))?;
        let &(family, rank) = &self.restricted_type.factors()[0];
        RootSystem::build(family, rank)?.attach_multiplicities(pattern)
    }

    /// Reference L_X for an annihilator of the given type.
    pub fn paper_lx(&self, annihilator: &LieType) -> u8 {
        if self.lx_exceptions.contains(annihilator) {
            3
        } else {
            2
        }
    }
}

fn simple(f: Family, r: usize) -> LieType {
    LieType::simple(f, r)
}

/// The twelve rows, in stable order EI..G.
pub fn list_spaces() -> Vec<SpaceDescriptor> {
    use Family as F;
    use LgProvenance as P;
    use SpaceLabel as L;
    vec![
        SpaceDescriptor {
            label: L::EI,
            absolute_type: simple(F::E, 6),
            restricted_type: simple(F::E, 6),
            rank: 6,
            dim_gk: 42,
            multiplicities: Some(MultiplicityPattern::uniform(1)),
            lx_exceptions: vec![simple(F::D, 5), simple(F::A, 5)],
            lg: 3,
            lg_provenance: P::Wright,
        },
        SpaceDescriptor {
            label: L::EII,
            absolute_type: simple(F::E, 6),
            restricted_type: simple(F::F, 4),
            rank: 4,
            dim_gk: 40,
            multiplicities: None,
            lx_exceptions: vec![],
            lg: 2,
            lg_provenance: P::Embedding,
        },
        SpaceDescriptor {
            label: L::EIII,
            absolute_type: simple(F::E, 6),
            restricted_type: simple(F::BC, 2),
            rank: 2,
            dim_gk: 32,
            multiplicities: Some(MultiplicityPattern::by_norm_sq(&[(2, 6), (1, 8), (4, 1)])),
            lx_exceptions: vec![],
            lg: 2,
            lg_provenance: P::Wright,
        },
        SpaceDescriptor {
            label: L::EIV,
            absolute_type: simple(F::E, 6),
            restricted_type: simple(F::A, 2),
            rank: 2,
            dim_gk: 26,
            multiplicities: Some(MultiplicityPattern::uniform(8)),
            lx_exceptions: vec![simple(F::A, 1)],
            lg: 3,
            lg_provenance: P::Wright,
        },
        SpaceDescriptor {
            label: L::EV,
            absolute_type: simple(F::E, 7),
            restricted_type: simple(F::E, 7),
            rank: 7,
            dim_gk: 70,
            multiplicities: Some(MultiplicityPattern::uniform(1)),
            lx_exceptions: vec![simple(F::E, 6), simple(F::D, 6)],
            lg: 3,
            lg_provenance: P::Wright,
        },
        SpaceDescriptor {
            label: L::EVI,
            absolute_type: simple(F::E, 7),
            restricted_type: simple(F::F, 4),
            rank: 4,
            dim_gk: 64,
            multiplicities: None,
            lx_exceptions: vec![],
            lg: 2,
            lg_provenance: P::Embedding,
        },
        SpaceDescriptor {
            label: L::EVII,
            absolute_type: simple(F::E, 7),
            restricted_type: simple(F::C, 3),
            rank: 3,
            dim_gk: 54,
            multiplicities: Some(MultiplicityPattern::by_norm_sq(&[(2, 8), (4, 1)])),
            lx_exceptions: vec![simple(F::C, 2)],
            lg: 3,
            lg_provenance: P::Wright,
        },
        SpaceDescriptor {
            label: L::EVIII,
            absolute_type: simple(F::E, 8),
            restricted_type: simple(F::E, 8),
            rank: 8,
            dim_gk: 128,
            multiplicities: Some(MultiplicityPattern::uniform(1)),
            lx_exceptions: vec![simple(F::E, 7)],
            lg: 3,
            lg_provenance: P::Wright,
        },
        SpaceDescriptor {
            label: L::EIX,
            absolute_type: simple(F::E, 8),
            restricted_type: simple(F::F, 4),
            rank: 4,
            dim_gk: 112,
            multiplicities: None,
            lx_exceptions: vec![],
            lg: 2,
            lg_provenance: P::Embedding,
        },
        SpaceDescriptor {
            label: L::FI,
            absolute_type: simple(F::F, 4),
            restricted_type: simple(F::F, 4),
            rank: 4,
            dim_gk: 28,
            multiplicities: Some(MultiplicityPattern::uniform(1)),
            lx_exceptions: vec![],
            lg: 2,
            lg_provenance: P::Wright,
        },
        SpaceDescriptor {
            label: L::FII,
            absolute_type: simple(F::F, 4),
            restricted_type: simple(F::BC, 1),
            rank: 1,
            dim_gk: 16,
            multiplicities: Some(MultiplicityPattern::by_norm_sq(&[(1, 8), (4, 7)])),
            lx_exceptions: vec![],
            lg: 2,
            lg_provenance: P::Regularity,
        },
        SpaceDescriptor {
            label: L::G,
            absolute_type: simple(F::G, 2),
            restricted_type: simple(F::G, 2),
            rank: 2,
            dim_gk: 8,
            multiplicities: Some(MultiplicityPattern::uniform(1)),
            lx_exceptions: vec![],
            lg: 2,
            lg_provenance: P::Wright,
        },
    ]
}

/// Looks up one row by Cartan label.
pub fn get_space(label: &str) -> Result<SpaceDescriptor> {
    let parsed = SpaceLabel::parse(label).ok_or_else(|| Error::UnknownSpace(label.to_string()))?;
    Ok(list_spaces()
        .into_iter()
        .find(|s| s.label == parsed)
        .expect("all labels present"))
}
