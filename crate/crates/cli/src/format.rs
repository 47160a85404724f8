//! The structured file formats: algebras, linear maps, deformation terms
//! and formal automorphisms.
//!
//! Rationals serialize as strings ("p/q"; the integer shorthand "k" is
//! accepted on input and normalized to "k/1"). Serialization is canonical:
//! reduced rationals, canonical tuple order, stable field order; loading a
//! file and re-serializing it is byte-stable.

use std::collections::BTreeMap;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use homnambu_core::cohomology::Cochain;
use homnambu_core::deformation::{FormalAutomorphism, FormalDeformation};
use homnambu_core::linalg::{Matrix, Scalar};
use homnambu_core::superalgebra::{BracketTensor, HomNambuSuperalgebra, LinearMap, SuperSpace};

pub const FORMAT_VERSION: &str = "1";

/// Loader errors; each variant carries a stable code and a location.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),

    #[error("unsupported format version {found:?} (expected {FORMAT_VERSION:?})")]
    Version { found: String },

    #[error("{location}: basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange {
        location: String,
        index: usize,
        dim: usize,
    },

    #[error("{location}: malformed rational {text:?}")]
    MalformedRational { location: String, text: String },

    #[error("parity list must contain only 0 and 1 (entry {index})")]
    BadParity { index: usize },

    #[error("{location}: expected a {expected}x{expected} grid")]
    BadGrid { location: String, expected: usize },

    #[error("alpha entry ({row}, {col}) violates parity (even map required)")]
    ParityViolatingAlpha { row: usize, col: usize },

    #[error("bracket entry {entry}: value violates the grading constraint")]
    GradingViolation { entry: usize },

    #[error("bracket entry {entry}: conflicts under super skew-symmetry with an earlier entry")]
    SkewConflict { entry: usize },

    #[error("bracket entry {entry}: expected {expected} arguments, found {found}")]
    BadArity {
        entry: usize,
        expected: usize,
        found: usize,
    },

    #[error("terms file: duplicate block for power {power}")]
    DuplicatePower { power: usize },

    #[error("terms file: power {power} exceeds the declared order {order}")]
    PowerOutOfRange { power: usize, order: usize },

    #[error("terms file: power 0 is implicit (the base bracket) and cannot be given")]
    PowerZero,

    #[error("automorphism file: power-0 term must be the identity")]
    NotIdentityLeading,

    #[error("{0}")]
    Core(#[from] homnambu_core::Error),
}

impl FormatError {
    /// Stable machine-readable error code.
    pub fn code(&self) -> &'static str {
        match self {
            FormatError::Json(_) => "malformed_json",
            FormatError::Version { .. } => "unsupported_version",
            FormatError::IndexOutOfRange { .. } => "index_out_of_range",
            FormatError::MalformedRational { .. } => "malformed_rational",
            FormatError::BadParity { .. } => "bad_parity",
            FormatError::BadGrid { .. } => "bad_grid",
            FormatError::ParityViolatingAlpha { .. } => "parity_violating_alpha",
            FormatError::GradingViolation { .. } => "grading_violation",
            FormatError::SkewConflict { .. } => "super_skew_conflict",
            FormatError::BadArity { .. } => "bad_arity",
            FormatError::DuplicatePower { .. } => "duplicate_power",
            FormatError::PowerOutOfRange { .. } => "power_out_of_range",
            FormatError::PowerZero => "power_zero",
            FormatError::NotIdentityLeading => "not_identity_leading",
            FormatError::Core(_) => "invalid_structure",
        }
    }
}

/// Canonical string form of a scalar: always "p/q" with q > 0, reduced.
pub fn scalar_to_string(x: &Scalar) -> String {
    format!("{}/{}", x.numer(), x.denom())
}

/// Parse "p/q" or the integer shorthand "k".
pub fn scalar_from_string(text: &str, location: &str) -> Result<Scalar, FormatError> {
    let bad = || FormatError::MalformedRational {
        location: location.to_string(),
        text: text.to_string(),
    };
    let mut parts = text.splitn(2, '/');
    let numer_text = parts.next().ok_or_else(bad)?.trim();
    let numer = BigInt::from_str(numer_text).map_err(|_| bad())?;
    let denom = match parts.next() {
        None => BigInt::one(),
        Some(dt) => {
            let d = BigInt::from_str(dt.trim()).map_err(|_| bad())?;
            if d.is_zero() || d.is_negative() {
                return Err(bad());
            }
            d
        }
    };
    Ok(Scalar::new(numer, denom))
}

/// One stored bracket value: argument tuple plus a sparse target vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BracketEntry {
    pub args: Vec<usize>,
    pub value: BTreeMap<usize, String>,
}

/// The algebra file: a graded space, an even twist and bracket structure
/// constants.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AlgebraFile {
    pub version: String,
    pub arity: usize,
    pub dimension: usize,
    pub parity: Vec<u8>,
    pub alpha: Vec<Vec<String>>,
    pub bracket: Vec<BracketEntry>,
}

fn check_version(version: &str) -> Result<(), FormatError> {
    if version != FORMAT_VERSION {
        return Err(FormatError::Version {
            found: version.to_string(),
        });
    }
    Ok(())
}

fn grid_to_matrix(grid: &[Vec<String>], dim: usize, location: &str) -> Result<Matrix, FormatError> {
    if grid.len() != dim || grid.iter().any(|row| row.len() != dim) {
        return Err(FormatError::BadGrid {
            location: location.to_string(),
            expected: dim,
        });
    }
    let mut m = Matrix::zero(dim, dim);
    for (r, row) in grid.iter().enumerate() {
        for (c, text) in row.iter().enumerate() {
            let loc = format!("{location}[{r}][{c}]");
            m.set(r, c, scalar_from_string(text, &loc)?);
        }
    }
    Ok(m)
}

fn matrix_to_grid(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|r| {
            (0..m.cols())
                .map(|c| scalar_to_string(m.get(r, c)))
                .collect()
        })
        .collect()
}

fn entry_to_raw(
    entry: &BracketEntry,
    index: usize,
    arity: usize,
    dim: usize,
) -> Result<(Vec<usize>, Vec<Scalar>), FormatError> {
    if entry.args.len() != arity {
        return Err(FormatError::BadArity {
            entry: index,
            expected: arity,
            found: entry.args.len(),
        });
    }
    for &a in &entry.args {
        if a >= dim {
            return Err(FormatError::IndexOutOfRange {
                location: format!("bracket entry {index}, args"),
                index: a,
                dim,
            });
        }
    }
    let mut value = homnambu_core::linalg::zero_vec(dim);
    for (&target, text) in &entry.value {
        if target >= dim {
            return Err(FormatError::IndexOutOfRange {
                location: format!("bracket entry {index}, value"),
                index: target,
                dim,
            });
        }
        let loc = format!("bracket entry {index}, value[{target}]");
        value[target] = scalar_from_string(text, &loc)?;
    }
    Ok((entry.args.clone(), value))
}

fn vec_to_sparse(value: &[Scalar]) -> BTreeMap<usize, String> {
    value
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, scalar_to_string(x)))
        .collect()
}

/// Parse an algebra file into a fully canonicalized algebra.
pub fn parse_algebra(bytes: &[u8]) -> Result<HomNambuSuperalgebra, FormatError> {
    let file: AlgebraFile = serde_json::from_slice(bytes)?;
    check_version(&file.version)?;
    if file.parity.len() != file.dimension {
        return Err(FormatError::BadGrid {
            location: "parity".to_string(),
            expected: file.dimension,
        });
    }
    if let Some(index) = file.parity.iter().position(|&p| p > 1) {
        return Err(FormatError::BadParity { index });
    }
    let space = SuperSpace::new(file.parity.clone()).map_err(FormatError::Core)?;
    let alpha_matrix = grid_to_matrix(&file.alpha, file.dimension, "alpha")?;
    // Reject parity-violating alpha entries with their location.
    for r in 0..file.dimension {
        for c in 0..file.dimension {
            if space.parity_of(r) != space.parity_of(c) && !alpha_matrix.get(r, c).is_zero() {
                return Err(FormatError::ParityViolatingAlpha { row: r, col: c });
            }
        }
    }
    let alpha = LinearMap::even(space.clone(), alpha_matrix).map_err(FormatError::Core)?;

    // Accumulate entries one at a time so conflicts report the offending
    // entry index.
    let mut raws: Vec<(Vec<usize>, Vec<Scalar>)> = Vec::new();
    let mut bracket = BracketTensor::zero(space.clone(), file.arity);
    for (index, entry) in file.bracket.iter().enumerate() {
        let raw = entry_to_raw(entry, index, file.arity, file.dimension)?;
        raws.push(raw);
        bracket =
            BracketTensor::from_entries(space.clone(), file.arity, raws.clone()).map_err(|e| {
                match e {
                    homnambu_core::Error::SkewConflict { .. } => {
                        FormatError::SkewConflict { entry: index }
                    }
                    homnambu_core::Error::GradingViolation { .. } => {
                        FormatError::GradingViolation { entry: index }
                    }
                    other => FormatError::Core(other),
                }
            })?;
    }
    HomNambuSuperalgebra::new(bracket, alpha).map_err(FormatError::Core)
}

/// Canonical byte-stable serialization of an algebra.
pub fn serialize_algebra(alg: &HomNambuSuperalgebra) -> String {
    let file = AlgebraFile {
        version: FORMAT_VERSION.to_string(),
        arity: alg.arity(),
        dimension: alg.dim(),
        parity: alg.space().parities().to_vec(),
        alpha: matrix_to_grid(alg.alpha().matrix()),
        bracket: alg
            .bracket()
            .canonical_entries()
            .map(|(t, v)| BracketEntry {
                args: t.clone(),
                value: vec_to_sparse(v),
            })
            .collect(),
    };
    to_pretty_json(&file)
}

/// A linear map file: a square grid over the algebra's space.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MapFile {
    pub version: String,
    pub dimension: usize,
    pub matrix: Vec<Vec<String>>,
}

/// Parse a map file against a target space. No parity is declared; callers
/// validate evenness where their operation requires it.
pub fn parse_map(bytes: &[u8], space: &SuperSpace) -> Result<LinearMap, FormatError> {
    let file: MapFile = serde_json::from_slice(bytes)?;
    check_version(&file.version)?;
    if file.dimension != space.dim() {
        return Err(FormatError::BadGrid {
            location: "matrix".to_string(),
            expected: space.dim(),
        });
    }
    let matrix = grid_to_matrix(&file.matrix, file.dimension, "matrix")?;
    LinearMap::with_inferred_parity(space.clone(), matrix).map_err(FormatError::Core)
}

pub fn serialize_map(map: &LinearMap) -> String {
    let file = MapFile {
        version: FORMAT_VERSION.to_string(),
        dimension: map.space().dim(),
        matrix: matrix_to_grid(map.matrix()),
    };
    to_pretty_json(&file)
}

/// One power block of a deformation terms file (the bracket entry schema,
/// one block per power of the formal parameter).
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermBlock {
    pub power: usize,
    pub entries: Vec<BracketEntry>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermsFile {
    pub version: String,
    pub order: usize,
    pub terms: Vec<TermBlock>,
}

/// Parse deformation terms against a base algebra; `order_override`
/// truncates or zero-extends the declared order.
pub fn parse_deformation(
    bytes: &[u8],
    base: &HomNambuSuperalgebra,
    order_override: Option<usize>,
) -> Result<FormalDeformation, FormatError> {
    let file: TermsFile = serde_json::from_slice(bytes)?;
    check_version(&file.version)?;
    let order = order_override.unwrap_or(file.order);
    let space = base.space().clone();
    let dim = space.dim();
    let arity = base.arity();
    let mut seen: BTreeMap<usize, Cochain> = BTreeMap::new();
    for block in &file.terms {
        if block.power == 0 {
            return Err(FormatError::PowerZero);
        }
        if block.power > file.order {
            return Err(FormatError::PowerOutOfRange {
                power: block.power,
                order: file.order,
            });
        }
        if seen.contains_key(&block.power) {
            return Err(FormatError::DuplicatePower { power: block.power });
        }
        let mut raw = Vec::new();
        for (index, entry) in block.entries.iter().enumerate() {
            raw.push(entry_to_raw(entry, index, arity, dim)?);
        }
        let cochain =
            Cochain::from_skew_entries(space.clone(), arity, 0, raw).map_err(|e| match e {
                homnambu_core::Error::SkewConflict { .. } => {
                    FormatError::SkewConflict { entry: block.power }
                }
                homnambu_core::Error::CochainGrading { .. } => {
                    FormatError::GradingViolation { entry: block.power }
                }
                other => FormatError::Core(other),
            })?;
        seen.insert(block.power, cochain);
    }
    let higher: Vec<Cochain> = (1..=order)
        .map(|p| {
            seen.remove(&p)
                .unwrap_or_else(|| Cochain::zero(space.clone(), arity, 1, 0))
        })
        .collect();
    FormalDeformation::new(base.clone(), higher).map_err(FormatError::Core)
}

pub fn serialize_deformation(d: &FormalDeformation) -> String {
    let terms: Vec<TermBlock> = (1..=d.order())
        .filter(|&p| !d.term(p).is_zero())
        .map(|p| TermBlock {
            power: p,
            entries: d
                .term(p)
                .skew_canonical_entries()
                .into_iter()
                .map(|(args, value)| BracketEntry {
                    args,
                    value: vec_to_sparse(&value),
                })
                .collect(),
        })
        .collect();
    let file = TermsFile {
        version: FORMAT_VERSION.to_string(),
        order: d.order(),
        terms,
    };
    to_pretty_json(&file)
}

/// A formal automorphism file: one matrix block per power, power 0 the
/// identity.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AutomorphismBlock {
    pub power: usize,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct AutomorphismFile {
    pub version: String,
    pub order: usize,
    pub terms: Vec<AutomorphismBlock>,
}

pub fn parse_automorphism(
    bytes: &[u8],
    alg: &HomNambuSuperalgebra,
    order_override: Option<usize>,
) -> Result<FormalAutomorphism, FormatError> {
    let file: AutomorphismFile = serde_json::from_slice(bytes)?;
    check_version(&file.version)?;
    let order = order_override.unwrap_or(file.order);
    let space = alg.space().clone();
    let d = space.dim();
    let mut terms = vec![LinearMap::identity(space.clone())];
    let mut blocks: BTreeMap<usize, Matrix> = BTreeMap::new();
    for block in &file.terms {
        let location = format!("automorphism power {}", block.power);
        let m = grid_to_matrix(&block.matrix, d, &location)?;
        if block.power == 0 {
            if m != Matrix::identity(d) {
                return Err(FormatError::NotIdentityLeading);
            }
            continue;
        }
        if blocks.insert(block.power, m).is_some() {
            return Err(FormatError::DuplicatePower { power: block.power });
        }
    }
    for p in 1..=order {
        let map = match blocks.remove(&p) {
            None => LinearMap::zero(space.clone(), Some(0)),
            Some(m) => LinearMap::even(space.clone(), m).map_err(FormatError::Core)?,
        };
        terms.push(map);
    }
    FormalAutomorphism::new(alg, terms).map_err(FormatError::Core)
}

pub fn serialize_automorphism(p: &FormalAutomorphism) -> String {
    let terms: Vec<AutomorphismBlock> = p
        .terms()
        .iter()
        .enumerate()
        .filter(|(i, t)| *i == 0 || !t.is_zero())
        .map(|(i, t)| AutomorphismBlock {
            power: i,
            matrix: matrix_to_grid(t.matrix()),
        })
        .collect();
    let file = AutomorphismFile {
        version: FORMAT_VERSION.to_string(),
        order: p.order(),
        terms,
    };
    to_pretty_json(&file)
}

/// Pretty JSON with a trailing newline; the single canonical output form.
pub fn to_pretty_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("serialization cannot fail");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use homnambu_core::testing::{sl2, super_1_1};

    #[test]
    fn minimal_file_parses() {
        let text = r#"{
            "version": "1",
            "arity": 2,
            "dimension": 1,
            "parity": [0],
            "alpha": [["1"]],
            "bracket": []
        }"#;
        let alg = parse_algebra(text.as_bytes()).unwrap();
        assert_eq!(alg.dim(), 1);
        assert!(alg.bracket().is_zero());
        assert!(homnambu_core::axioms::is_valid(&alg));
    }

    #[test]
    fn integer_shorthand_normalizes() {
        assert_eq!(
            scalar_from_string("3", "x").unwrap(),
            scalar_from_string("3/1", "x").unwrap()
        );
        assert_eq!(
            scalar_from_string("-4/6", "x").unwrap(),
            scalar_from_string("-2/3", "x").unwrap()
        );
        assert!(scalar_from_string("1/0", "x").is_err());
        assert!(scalar_from_string("a", "x").is_err());
        assert!(scalar_from_string("1/-2", "x").is_err());
    }

    #[test]
    fn round_trip_is_byte_stable() {
        for alg in [sl2(), super_1_1()] {
            let text = serialize_algebra(&alg);
            let parsed = parse_algebra(text.as_bytes()).unwrap();
            assert_eq!(parsed, alg);
            assert_eq!(serialize_algebra(&parsed), text);
        }
    }

    #[test]
    fn skew_conflict_detected() {
        // Entries for (0,1) and (1,0) not related by the skew sign.
        let text = r#"{
            "version": "1",
            "arity": 2,
            "dimension": 3,
            "parity": [0, 0, 0],
            "alpha": [["1","0","0"],["0","1","0"],["0","0","1"]],
            "bracket": [
                {"args": [0, 1], "value": {"2": "1"}},
                {"args": [1, 0], "value": {"2": "1"}}
            ]
        }"#;
        match parse_algebra(text.as_bytes()) {
            Err(FormatError::SkewConflict { entry }) => assert_eq!(entry, 1),
            other => panic!("expected skew conflict, got {other:?}"),
        }
    }

    #[test]
    fn grading_violation_detected() {
        let text = r#"{
            "version": "1",
            "arity": 2,
            "dimension": 2,
            "parity": [0, 1],
            "alpha": [["1","0"],["0","1"]],
            "bracket": [
                {"args": [0, 1], "value": {"0": "1"}}
            ]
        }"#;
        match parse_algebra(text.as_bytes()) {
            Err(FormatError::GradingViolation { entry }) => assert_eq!(entry, 0),
            other => panic!("expected grading violation, got {other:?}"),
        }
    }

    #[test]
    fn parity_violating_alpha_detected() {
        let text = r#"{
            "version": "1",
            "arity": 2,
            "dimension": 2,
            "parity": [0, 1],
            "alpha": [["1","1"],["0","1"]],
            "bracket": []
        }"#;
        match parse_algebra(text.as_bytes()) {
            Err(FormatError::ParityViolatingAlpha { row, col }) => {
                assert_eq!((row, col), (0, 1));
            }
            other => panic!("expected parity violation, got {other:?}"),
        }
    }

    #[test]
    fn index_out_of_range_detected() {
        let text = r#"{
            "version": "1",
            "arity": 2,
            "dimension": 2,
            "parity": [0, 0],
            "alpha": [["1","0"],["0","1"]],
            "bracket": [
                {"args": [0, 5], "value": {}}
            ]
        }"#;
        assert!(matches!(
            parse_algebra(text.as_bytes()),
            Err(FormatError::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn entries_in_any_order_merge() {
        // sl(2) with [f, e] given instead of [e, f].
        let text = r#"{
            "version": "1",
            "arity": 2,
            "dimension": 3,
            "parity": [0, 0, 0],
            "alpha": [["1","0","0"],["0","1","0"],["0","0","1"]],
            "bracket": [
                {"args": [1, 0], "value": {"2": "-1"}},
                {"args": [2, 0], "value": {"0": "2"}},
                {"args": [2, 1], "value": {"1": "-2"}}
            ]
        }"#;
        let alg = parse_algebra(text.as_bytes()).unwrap();
        assert_eq!(alg, sl2());
    }
}
