//! Machine-readable output shapes. Each struct round-trips through JSON
//! unchanged.

use npcert::corpus::EntryOutcome;
use npcert::kronecker::{Factorization, SearchLimits};
use npcert::newton::{DumasCheck, NewtonPolygon, SegmentVector};
use npcert::roots::{RootSet, VietaCheck};
use npcert::Polynomial;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolygonJson {
    pub prime: String,
    pub vertices: Vec<[u64; 2]>,
    pub segments: Vec<SegmentVector>,
}

impl From<&NewtonPolygon> for PolygonJson {
    fn from(np: &NewtonPolygon) -> Self {
        PolygonJson {
            prime: np.prime.to_string(),
            vertices: np
                .vertices
                .iter()
                .map(|v| [v.index as u64, v.val])
                .collect(),
            segments: np.segment_vectors().to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct FactorJson {
    pub factors: Vec<Polynomial>,
    pub unit: i8,
    pub exhaustive: bool,
    pub limits: SearchLimits,
}

impl From<&Factorization> for FactorJson {
    fn from(f: &Factorization) -> Self {
        FactorJson {
            factors: f.factors.clone(),
            unit: f.unit,
            exhaustive: f.exhaustive,
            limits: f.limits,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootJson {
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RootsJson {
    pub roots: Vec<RootJson>,
    pub min_modulus: f64,
    pub vieta_product: f64,
    pub constant_over_leading: f64,
    pub vieta_holds: bool,
}

impl RootsJson {
    pub fn new(roots: &RootSet, vieta: &VietaCheck) -> Self {
        RootsJson {
            roots: roots
                .roots
                .iter()
                .zip(&roots.residuals)
                .map(|(z, &residual)| RootJson {
                    re: z.re,
                    im: z.im,
                    modulus: z.norm(),
                    residual,
                })
                .collect(),
            min_modulus: roots.min_modulus(),
            vieta_product: vieta.product,
            constant_over_leading: vieta.expected,
            vieta_holds: vieta.holds,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DumasJson {
    pub prime: String,
    pub holds: bool,
    pub product: Vec<SegmentVector>,
    pub left: Vec<SegmentVector>,
    pub right: Vec<SegmentVector>,
}

impl DumasJson {
    pub fn new(prime: &num_bigint::BigInt, check: &DumasCheck) -> Self {
        DumasJson {
            prime: prime.to_string(),
            holds: check.holds,
            product: check.product.to_vec(),
            left: check.left.to_vec(),
            right: check.right.to_vec(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CorpusJson {
    pub passed: usize,
    pub failed: usize,
    pub entries: Vec<EntryOutcome>,
}

pub fn limits_line(l: &SearchLimits) -> String {
    match l.max_degree {
        Some(d) => format!("max degree {d}, divisor cap {}", l.divisor_cap),
        None => format!("max degree floor(n/2), divisor cap {}", l.divisor_cap),
    }
}
