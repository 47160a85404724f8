//! Report payloads for the command surface, in both human-readable text
//! and structured (JSON) form. Output is deterministic: repeated runs over
//! the same inputs produce identical bytes.

use serde::Serialize;

use homnambu_core::axioms::AxiomReport;
use homnambu_core::cohomology::{CohomologySummary, LevelReport, OperatorComparison};
use homnambu_core::deformation::DeformationReport;
use homnambu_core::derivations::{DerSuperReport, DerivationSpace, InnerSpace};
use homnambu_core::linalg::Scalar;

use crate::format::scalar_to_string;

pub fn scalars_to_strings(v: &[Scalar]) -> Vec<String> {
    v.iter().map(scalar_to_string).collect()
}

#[derive(Debug, Serialize)]
pub struct WitnessDto {
    pub args: Vec<usize>,
    pub left: Vec<String>,
    pub right: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct AxiomDto {
    pub axiom: &'static str,
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessDto>,
}

impl AxiomDto {
    pub fn from_report(r: &AxiomReport) -> Self {
        AxiomDto {
            axiom: r.axiom.name(),
            holds: r.holds,
            witness: r.witness.as_ref().map(|w| WitnessDto {
                args: w.args.clone(),
                left: scalars_to_strings(&w.left),
                right: scalars_to_strings(&w.right),
            }),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct VerifyDto {
    pub command: &'static str,
    pub valid: bool,
    pub axioms: Vec<AxiomDto>,
}

impl VerifyDto {
    pub fn new(reports: &[AxiomReport]) -> Self {
        VerifyDto {
            command: "verify",
            valid: reports.iter().all(|r| r.holds),
            axioms: reports.iter().map(AxiomDto::from_report).collect(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = String::new();
        for a in &self.axioms {
            out.push_str(&format!(
                "{:<14} {}\n",
                a.axiom,
                if a.holds { "holds" } else { "FAILS" }
            ));
            if let Some(w) = &a.witness {
                out.push_str(&format!(
                    "  witness: args {:?}, left {:?}, right {:?}\n",
                    w.args, w.left, w.right
                ));
            }
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.valid { "valid" } else { "INVALID" }
        ));
        out
    }
}

#[derive(Debug, Serialize)]
pub struct GraphDto {
    pub command: &'static str,
    pub is_morphism: bool,
    pub graph_is_subalgebra: bool,
    pub graph_dim: usize,
    pub basis: Vec<Vec<String>>,
    pub parities: Vec<u8>,
}

impl GraphDto {
    pub fn text(&self) -> String {
        let mut out = format!(
            "is_morphism:          {}\ngraph_is_subalgebra:  {}\ngraph dimension:      {}\n",
            self.is_morphism, self.graph_is_subalgebra, self.graph_dim
        );
        for (v, p) in self.basis.iter().zip(&self.parities) {
            out.push_str(&format!("  basis (parity {p}): {v:?}\n"));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct DerDto {
    pub command: &'static str,
    pub k: usize,
    pub parity: u8,
    pub dim: usize,
    pub basis: Vec<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inner_dim: Option<usize>,
}

impl DerDto {
    pub fn new(
        alg: &homnambu_core::HomNambuSuperalgebra,
        space: &DerivationSpace,
        inner: Option<&InnerSpace>,
    ) -> Self {
        let basis = space
            .maps(alg)
            .iter()
            .map(|m| {
                (0..alg.dim())
                    .map(|r| {
                        (0..alg.dim())
                            .map(|c| scalar_to_string(m.matrix().get(r, c)))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        DerDto {
            command: "der",
            k: space.k,
            parity: space.parity,
            dim: space.dim(),
            basis,
            inner_dim: inner.map(InnerSpace::dim),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "derivations at twist level {} (parity {}): dim {}\n",
            self.k, self.parity, self.dim
        );
        if let Some(i) = self.inner_dim {
            out.push_str(&format!(
                "inner derivations at level {}: dim {}\n",
                self.k, i
            ));
        }
        for (idx, m) in self.basis.iter().enumerate() {
            out.push_str(&format!("  basis map {idx}:\n"));
            for row in m {
                out.push_str(&format!("    {row:?}\n"));
            }
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct CohomDto {
    pub command: &'static str,
    pub label: &'static str,
    pub cocycle_even: usize,
    pub cocycle_odd: usize,
    pub coboundary_even: usize,
    pub coboundary_odd: usize,
    pub h_even: usize,
    pub h_odd: usize,
    pub rigid: bool,
}

impl CohomDto {
    pub fn new(s: &CohomologySummary) -> Self {
        CohomDto {
            command: "cohom",
            label: "H_def (deformation complex, classical H^2)",
            cocycle_even: s.cocycle_even,
            cocycle_odd: s.cocycle_odd,
            coboundary_even: s.coboundary_even,
            coboundary_odd: s.coboundary_odd,
            h_even: s.h_even,
            h_odd: s.h_odd,
            rigid: s.rigid,
        }
    }

    pub fn text(&self) -> String {
        format!(
            "deformation complex ({})\n\
             Z_def: even {}, odd {}\n\
             B_def: even {}, odd {}\n\
             H_def: even {}, odd {}\n\
             rigid: {}\n",
            self.label,
            self.cocycle_even,
            self.cocycle_odd,
            self.coboundary_even,
            self.coboundary_odd,
            self.h_even,
            self.h_odd,
            self.rigid
        )
    }
}

#[derive(Debug, Serialize)]
pub struct LevelDto {
    pub command: &'static str,
    pub level: usize,
    pub compatible_even: usize,
    pub compatible_odd: usize,
    pub cocycle_even: usize,
    pub cocycle_odd: usize,
    pub coboundary_even: usize,
    pub coboundary_odd: usize,
    pub h_even: usize,
    pub h_odd: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub operator_comparison: Option<ComparisonDto>,
}

#[derive(Debug, Serialize)]
pub struct ComparisonDto {
    pub direct_kernel_even: usize,
    pub direct_kernel_odd: usize,
    pub generic_kernel_even: usize,
    pub generic_kernel_odd: usize,
    pub kernels_agree: bool,
}

impl LevelDto {
    pub fn new(r: &LevelReport, cmp: Option<&OperatorComparison>) -> Self {
        LevelDto {
            command: "cohom",
            level: r.level,
            compatible_even: r.compatible[0],
            compatible_odd: r.compatible[1],
            cocycle_even: r.cocycles[0],
            cocycle_odd: r.cocycles[1],
            coboundary_even: r.coboundaries[0],
            coboundary_odd: r.coboundaries[1],
            h_even: r.cohomology[0],
            h_odd: r.cohomology[1],
            operator_comparison: cmp.map(|c| ComparisonDto {
                direct_kernel_even: c.direct_kernel_even,
                direct_kernel_odd: c.direct_kernel_odd,
                generic_kernel_even: c.generic_kernel_even,
                generic_kernel_odd: c.generic_kernel_odd,
                kernels_agree: c.kernels_agree,
            }),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "generic complex at level {} (twist-compatible subcomplex)\n\
             compatible cochains: even {}, odd {}\n\
             Z: even {}, odd {}\n\
             B: even {}, odd {}\n\
             H: even {}, odd {}\n",
            self.level,
            self.compatible_even,
            self.compatible_odd,
            self.cocycle_even,
            self.cocycle_odd,
            self.coboundary_even,
            self.coboundary_odd,
            self.h_even,
            self.h_odd
        );
        if let Some(c) = &self.operator_comparison {
            out.push_str(&format!(
                "level-1 operator diagnostic: direct kernel (even {}, odd {}), \
                 generic kernel (even {}, odd {}), agree: {}\n",
                c.direct_kernel_even,
                c.direct_kernel_odd,
                c.generic_kernel_even,
                c.generic_kernel_odd,
                c.kernels_agree
            ));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct DeformFailureDto {
    pub order: usize,
    pub witness: Vec<usize>,
    pub residual: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct DeformCheckDto {
    pub command: &'static str,
    pub order: usize,
    pub valid_to_order: i64,
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<DeformFailureDto>,
}

impl DeformCheckDto {
    pub fn new(r: &DeformationReport) -> Self {
        DeformCheckDto {
            command: "deform-check",
            order: r.order,
            valid_to_order: r.valid_to_order,
            valid: r.is_valid(),
            first_failure: r.first_failure.as_ref().map(|f| DeformFailureDto {
                order: f.order,
                witness: f.witness.clone(),
                residual: scalars_to_strings(&f.residual),
            }),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!(
            "order: {}\nvalid_to_order: {}\nvalid: {}\n",
            self.order, self.valid_to_order, self.valid
        );
        if let Some(f) = &self.first_failure {
            out.push_str(&format!(
                "first failure at order {}: witness {:?}, residual {:?}\n",
                f.order, f.witness, f.residual
            ));
        }
        out
    }
}

#[derive(Debug, Serialize)]
pub struct DerStructureDto {
    pub command: &'static str,
    pub k_max: usize,
    pub der_dims: Vec<(usize, usize, usize)>,
    pub inner_dims: Vec<(usize, usize)>,
    pub commutator_closure: bool,
    pub inner_ideal_sharp: bool,
    pub inner_ideal_total: bool,
    pub super_jacobi: bool,
    pub all_hold: bool,
}

impl DerStructureDto {
    pub fn new(r: &DerSuperReport) -> Self {
        DerStructureDto {
            command: "der-structure",
            k_max: r.k_max,
            der_dims: r.der_dims.clone(),
            inner_dims: r.inner_dims.clone(),
            commutator_closure: r.commutator_closure.holds,
            inner_ideal_sharp: r.inner_ideal_sharp.holds,
            inner_ideal_total: r.inner_ideal_total.holds,
            super_jacobi: r.super_jacobi.holds,
            all_hold: r.all_hold(),
        }
    }

    pub fn text(&self) -> String {
        let mut out = format!("derivation structure up to twist level {}\n", self.k_max);
        for (k, even, odd) in &self.der_dims {
            out.push_str(&format!("  level {k}: even {even}, odd {odd}\n"));
        }
        for (k, dim) in &self.inner_dims {
            out.push_str(&format!("  inner level {k}: dim {dim}\n"));
        }
        out.push_str(&format!(
            "commutator closure: {}\ninner ideal (sharp level): {}\n\
             inner ideal (total): {}\nsuper Jacobi: {}\n",
            self.commutator_closure,
            self.inner_ideal_sharp,
            self.inner_ideal_total,
            self.super_jacobi
        ));
        out
    }
}

/// Generic structured failure payload for commands whose success output is
/// a file (twist, trivialize, equiv).
#[derive(Debug, Serialize)]
pub struct FailureDto {
    pub command: &'static str,
    pub ok: bool,
    pub reason: String,
}

impl FailureDto {
    pub fn new(command: &'static str, reason: &str) -> Self {
        FailureDto {
            command,
            ok: false,
            reason: reason.to_string(),
        }
    }
}

#[derive(Debug, Serialize)]
pub struct ReduceFailureDto {
    pub command: &'static str,
    pub ok: bool,
    pub order: usize,
    pub coboundary_without_twist_constraint: bool,
}
