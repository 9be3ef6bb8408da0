//! Definition files: JSON with rationals as `"p/q"` strings and sparse
//! tensors as arrays of `{indices, value}`.

use std::collections::BTreeSet;

use omatrix_core::doubles::BilinearProduct;
use omatrix_core::exact::{parse_scalar, Matrix, Scalar, Tensor};
use omatrix_core::lie::{LieAlgebra, Representation};
use serde::Deserialize;

use crate::error::CliError;

pub const SCHEMA: &str = "omatrix/1";

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema: String,
    pub scalar: String,
    #[serde(default)]
    pub name: Option<String>,
    #[serde(default)]
    pub lie_algebra: Option<LieSpec>,
    #[serde(default)]
    pub representation: Option<ModuleSpec>,
    #[serde(default)]
    pub r_matrix: Option<SparseSpec>,
    #[serde(default)]
    pub o_operator: Option<OperatorSpec>,
    #[serde(default)]
    pub rho: Option<ModuleSpec>,
    #[serde(default)]
    pub product: Option<ProductSpec>,
    #[serde(default)]
    pub diff_params: Option<DiffSpec>,
    pub checks: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub indices: Vec<usize>,
    pub value: String,
}

/// Structure constants `[e_i, e_j] = Σ c e_k`, listed once per unordered
/// pair as `indices: [i, j, k]`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LieSpec {
    pub names: Vec<String>,
    #[serde(default)]
    pub brackets: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum ModuleKind {
    #[default]
    Explicit,
    Adjoint,
    Coadjoint,
}

/// `e_i · v_α = Σ_γ chi v_γ` with `indices: [i, α, γ]`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleSpec {
    #[serde(default)]
    pub kind: ModuleKind,
    #[serde(default)]
    pub dim: Option<usize>,
    #[serde(default)]
    pub action: Vec<Entry>,
}

/// `r = Σ r^{ij} e_i ⊗ e_j` with `indices: [i, j]`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SparseSpec {
    pub entries: Vec<Entry>,
}

#[derive(Clone, Copy, Debug, Default, Deserialize, PartialEq, Eq)]
#[serde(rename_all = "lowercase")]
pub enum OperatorDomain {
    #[default]
    Coadjoint,
    Representation,
}

/// `O(v_α) = Σ_k o e_k` with `indices: [k, α]`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct OperatorSpec {
    #[serde(default)]
    pub domain: OperatorDomain,
    pub entries: Vec<Entry>,
}

/// `e_i e_j = Σ m e_k` with `indices: [i, j, k]`.
#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProductSpec {
    pub dim: usize,
    pub entries: Vec<Entry>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiffSpec {
    pub mu: String,
    pub eps: String,
}

/// A validated manifest.
#[derive(Clone, Debug)]
pub struct Problem {
    pub name: String,
    pub algebra: Option<LieAlgebra>,
    pub representation: Option<Representation>,
    pub r: Option<Matrix>,
    pub o: Option<(Matrix, OperatorDomain)>,
    pub rho: Option<Representation>,
    pub product: Option<BilinearProduct>,
    pub diff: Option<(Scalar, Scalar)>,
    pub checks: Vec<String>,
}

pub fn parse(text: &str) -> Result<Manifest, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        CliError::invalid(if path == "." { "manifest".to_string() } else { path }, e.inner().to_string())
    })
}

fn scalar(path: &str, text: &str) -> Result<Scalar, CliError> {
    parse_scalar(text).map_err(|e| CliError::invalid(path, e.to_string()))
}

fn sparse(path: &str, shape: &[usize], entries: &[Entry]) -> Result<Tensor, CliError> {
    let mut t = Tensor::zeros(shape);
    let mut seen = BTreeSet::new();
    for (k, e) in entries.iter().enumerate() {
        let at = format!("{path}[{k}]");
        if e.indices.len() != shape.len() || e.indices.iter().zip(shape).any(|(i, n)| i >= n) {
            return Err(CliError::invalid(format!("{at}.indices"), format!("{:?} out of range for shape {shape:?}", e.indices)));
        }
        if !seen.insert(e.indices.clone()) {
            return Err(CliError::invalid(format!("{at}.indices"), "repeated index"));
        }
        t.set(&e.indices, scalar(&format!("{at}.value"), &e.value)?);
    }
    Ok(t)
}

fn module(path: &str, spec: &ModuleSpec, alg: &LieAlgebra) -> Result<Representation, CliError> {
    match spec.kind {
        ModuleKind::Adjoint => Ok(Representation::adjoint(alg)),
        ModuleKind::Coadjoint => Ok(Representation::coadjoint(alg)),
        ModuleKind::Explicit => {
            let dim = spec.dim.ok_or_else(|| CliError::invalid(format!("{path}.dim"), "required for explicit modules"))?;
            let chi = sparse(&format!("{path}.action"), &[alg.dim(), dim, dim], &spec.action)?;
            Representation::unchecked(alg.dim(), dim, chi).map_err(|e| CliError::invalid(path, e.to_string()))
        }
    }
}

impl Manifest {
    /// Checks the schema tag and cross-section consistency.
    pub fn validate(self) -> Result<Problem, CliError> {
        if self.schema != SCHEMA {
            return Err(CliError::invalid("schema", format!("expected \"{SCHEMA}\", found \"{}\"", self.schema)));
        }
        if self.scalar != "rational" {
            return Err(CliError::invalid("scalar", format!("only \"rational\" is supported, found \"{}\"", self.scalar)));
        }
        let algebra = match &self.lie_algebra {
            None => None,
            Some(spec) => {
                let n = spec.names.len();
                if n == 0 {
                    return Err(CliError::invalid("lie_algebra.names", "empty basis"));
                }
                let mut c = Tensor::zeros(&[n, n, n]);
                let mut pairs = BTreeSet::new();
                for (k, e) in spec.brackets.iter().enumerate() {
                    let at = format!("lie_algebra.brackets[{k}]");
                    let [i, j, l] = e.indices[..] else {
                        return Err(CliError::invalid(format!("{at}.indices"), "expected [i, j, k]"));
                    };
                    if i.max(j).max(l) >= n {
                        return Err(CliError::invalid(format!("{at}.indices"), "index out of range"));
                    }
                    if i == j {
                        return Err(CliError::invalid(format!("{at}.indices"), "[e_i, e_i] is zero by antisymmetry"));
                    }
                    if !pairs.insert((i.min(j), i.max(j), l)) {
                        return Err(CliError::invalid(format!("{at}.indices"), "pair listed twice"));
                    }
                    let v = scalar(&format!("{at}.value"), &e.value)?;
                    c.add_at(&[i, j, l], &v);
                    c.add_at(&[j, i, l], &-v);
                }
                Some(LieAlgebra::antisymmetric(spec.names.clone(), c).map_err(|e| CliError::invalid("lie_algebra", e.to_string()))?)
            }
        };
        let need_alg = |section: &str| {
            algebra.as_ref().ok_or_else(|| CliError::invalid(section, "requires a lie_algebra section"))
        };
        let representation = match &self.representation {
            None => None,
            Some(spec) => Some(module("representation", spec, need_alg("representation")?)?),
        };
        let r = match &self.r_matrix {
            None => None,
            Some(spec) => {
                let n = need_alg("r_matrix")?.dim();
                let t = sparse("r_matrix.entries", &[n, n], &spec.entries)?;
                Some(Matrix::from_tensor(&t).map_err(|e| CliError::invalid("r_matrix", e.to_string()))?)
            }
        };
        let o = match &self.o_operator {
            None => None,
            Some(spec) => {
                let n = need_alg("o_operator")?.dim();
                let m = match spec.domain {
                    OperatorDomain::Coadjoint => n,
                    OperatorDomain::Representation => representation
                        .as_ref()
                        .ok_or_else(|| CliError::invalid("o_operator.domain", "no representation section"))?
                        .dim(),
                };
                let t = sparse("o_operator.entries", &[n, m], &spec.entries)?;
                Some((Matrix::from_tensor(&t).map_err(|e| CliError::invalid("o_operator", e.to_string()))?, spec.domain))
            }
        };
        let rho = match &self.rho {
            None => None,
            Some(spec) => {
                let alg = need_alg("rho")?;
                let rep = module("rho", spec, alg)?;
                if rep.dim() != alg.dim() {
                    return Err(CliError::invalid("rho.dim", "a module on the dual space must have the algebra's dimension"));
                }
                Some(rep)
            }
        };
        let product = match &self.product {
            None => None,
            Some(spec) => {
                let d = spec.dim;
                let t = sparse("product.entries", &[d, d, d], &spec.entries)?;
                Some(BilinearProduct::new(d, t).map_err(|e| CliError::invalid("product", e.to_string()))?)
            }
        };
        let diff = match &self.diff_params {
            None => None,
            Some(spec) => Some((scalar("diff_params.mu", &spec.mu)?, scalar("diff_params.eps", &spec.eps)?)),
        };
        if self.checks.is_empty() {
            return Err(CliError::invalid("checks", "no checks requested"));
        }
        Ok(Problem {
            name: self.name.unwrap_or_else(|| "unnamed".to_string()),
            algebra,
            representation,
            r,
            o,
            rho,
            product,
            diff,
            checks: self.checks,
        })
    }
}

pub fn load(text: &str) -> Result<Problem, CliError> {
    parse(text)?.validate()
}
