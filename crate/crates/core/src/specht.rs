//! Cell modules of the cell datum, their bilinear forms, and decomposition
//! numbers at a specialization of the parameters.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;
use std::sync::Arc;

use crate::canonical::{charge_from, decomposition_matrix};
use crate::cells::{cell_datum, CellDatum};
use crate::combinat::Bipartition;
use crate::crystal::uglov_bipartitions;
use crate::cyclotomic::Cyclotomic;
use crate::domino::StandardBitableau;
use crate::error::{Error, Result};
use crate::fock::Charge;
use crate::hecke::{kl_basis, KlBasis, XiOrder};
use crate::linalg::{inverse, kernel, rank, rref, solve_unique, Matrix};
use crate::scalar::{AsInteger, Coeff, Field};
use crate::{ACoeff, Bounds, Gamma};

/// A ring map `θ: A → k`, given by the images of `q = e^a` and `Q = e^b`.
#[derive(Clone, Debug)]
pub struct Specialization<F: Field> {
    /// `Some(e)` for the root-of-unity specialization, `None` for a rational point.
    pub e: Option<usize>,
    pub d: i64,
    q: Cyclotomic<F>,
    big_q: Cyclotomic<F>,
}

pub type CycloSpecialization = Specialization<BigRational>;

fn power<F: Field>(x: &Cyclotomic<F>, k: i32) -> Cyclotomic<F> {
    let base = if k < 0 { x.inv() } else { x.clone() };
    (0..k.unsigned_abs()).fold(Cyclotomic::one(), |acc, _| acc * base.clone())
}

impl<F: Field> Specialization<F> {
    /// `q₀ = ζ_{4e}²` and `Q₀ = ζ_{4e}^{e+2d}`, so that `q₀²` is a primitive
    /// `e`-th root of unity and `Q₀² = −q₀^{2d}`.
    pub fn root_of_unity(e: usize, d: i64) -> Self {
        assert!(e >= 1, "e must be positive");
        let m = 4 * e as u32;
        Specialization {
            e: Some(e),
            d,
            q: Cyclotomic::zeta_power(m, 2),
            big_q: Cyclotomic::zeta_power(m, e as i64 + 2 * d),
        }
    }

    pub fn rational(q: F, big_q: F) -> Self {
        Specialization {
            e: None,
            d: 0,
            q: Cyclotomic::constant(q),
            big_q: Cyclotomic::constant(big_q),
        }
    }

    /// `q = 2`, `Q = 3`: the algebra is semisimple there for every `n`.
    pub fn generic() -> Self {
        Self::rational(F::from_i64(2), F::from_i64(3))
    }

    pub fn q(&self) -> &Cyclotomic<F> {
        &self.q
    }

    pub fn big_q(&self) -> &Cyclotomic<F> {
        &self.big_q
    }

    pub fn theta(&self, g: Gamma) -> Cyclotomic<F> {
        power(&self.q, g.alpha) * power(&self.big_q, g.beta)
    }

    pub fn apply(&self, c: &ACoeff) -> Cyclotomic<F> {
        c.eval(|g| self.theta(g), |&x| Cyclotomic::from_i64(x))
    }

    pub fn apply_matrix(&self, m: &Matrix<ACoeff>) -> Matrix<Cyclotomic<F>> {
        m.map(|c| self.apply(c))
    }
}

impl<F: Field> fmt::Display for Specialization<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.e {
            Some(e) => write!(f, "root of unity (e = {e}, d = {})", self.d),
            None => write!(f, "generic"),
        }
    }
}

/// The cell module `S_λ` over `A`: basis `SBT(λ)`, left action of the
/// generators `T_s`, and the Gram matrix of its bilinear form.
#[derive(Clone, Debug)]
pub struct CellModuleData {
    pub shape: Bipartition,
    pub tableaux: Vec<StandardBitableau>,
    /// Column `j` of `generators[s]` is `T_s · C_{tableaux[j]}`.
    pub generators: Vec<Matrix<ACoeff>>,
    pub gram: Matrix<ACoeff>,
}

impl CellModuleData {
    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// `M_s^T G = G M_s` for every generator, i.e. `φ(T_s x, y) = φ(x, T_s y)`.
    pub fn adjointness_holds(&self) -> bool {
        self.generators
            .iter()
            .all(|m| m.transpose().mul(&self.gram) == self.gram.mul(m))
    }

    pub fn specialize<F: Field>(&self, spec: &Specialization<F>) -> SpecializedModule<F> {
        SpecializedModule {
            shape: self.shape.clone(),
            generators: self
                .generators
                .iter()
                .map(|m| spec.apply_matrix(m))
                .collect(),
            gram: Some(spec.apply_matrix(&self.gram)),
        }
    }
}

/// Builds `S_λ` from the structure constants of the `C_{S,T}` basis, with the
/// right index fixed to the first standard bitableau of shape `λ`.
pub fn cell_module(lambda: &Bipartition, datum: &CellDatum) -> Result<CellModuleData> {
    let tableaux = datum.tableaux(lambda).to_vec();
    let t0 = tableaux.first().ok_or_else(|| {
        Error::MalformedTableau(format!("no standard bitableaux of shape {lambda}"))
    })?;
    let pos = |t: &StandardBitableau| tableaux.iter().position(|x| x == t);
    let alg = datum.basis().algebra();
    let dim = tableaux.len();
    let c = |s: &StandardBitableau, t: &StandardBitableau| -> Result<&crate::hecke::HeckeElement> {
        datum
            .c_st(s, t)
            .ok_or_else(|| Error::Internal(format!("no basis element for ({s}, {t})")))
    };

    let mut generators = Vec::new();
    for gen in 0..alg.group().num_generators() {
        let mut m = Matrix::zeros(dim, dim);
        for (j, s) in tableaux.iter().enumerate() {
            let prod = alg.mul_gen_left(gen, c(s, t0)?);
            for (&y, coeff) in datum.expand(&prod).terms() {
                let (s2, t2) = datum.pair(y);
                if datum.shape_of(y) == lambda && t2 == t0 {
                    let i = pos(s2)
                        .ok_or_else(|| Error::Internal(format!("{s2} not of shape {lambda}")))?;
                    m[(i, j)] = coeff.clone();
                }
            }
        }
        generators.push(m);
    }

    let w0 = datum
        .element_index(t0, t0)
        .ok_or_else(|| Error::Internal(format!("no basis element for ({t0}, {t0})")))?;
    let mut gram = Matrix::zeros(dim, dim);
    for (i, ti) in tableaux.iter().enumerate() {
        let left = c(t0, ti)?;
        for (j, tj) in tableaux.iter().enumerate() {
            let prod = alg.mul(left, c(tj, t0)?);
            gram[(i, j)] = datum.expand(&prod).coeff(w0);
        }
    }
    Ok(CellModuleData {
        shape: lambda.clone(),
        tableaux,
        generators,
        gram,
    })
}

/// A module over `k` given by the matrices of the generators.
#[derive(Clone, Debug)]
pub struct SpecializedModule<F: Field> {
    pub shape: Bipartition,
    pub generators: Vec<Matrix<Cyclotomic<F>>>,
    /// Present for cell modules, absent for their simple heads.
    pub gram: Option<Matrix<Cyclotomic<F>>>,
}

impl<F: Field> SpecializedModule<F> {
    pub fn dim(&self) -> usize {
        self.generators.first().map_or(1, |m| m.rows())
    }

    pub fn gram_rank(&self) -> usize {
        self.gram.as_ref().map_or(self.dim(), rank)
    }

    /// `D_λ = S_λ / rad φ_λ`, or `None` when the form vanishes.
    pub fn simple_head(&self) -> Result<Option<SpecializedModule<F>>> {
        let Some(gram) = &self.gram else {
            return Ok(Some(self.clone()));
        };
        let (_, pivots) = rref(gram);
        if pivots.is_empty() {
            return Ok(None);
        }
        let dim = self.dim();
        let radical = kernel(gram);
        // Coordinates outside the pivots are free in `radical`, so the pivot
        // unit vectors complete it to a basis.
        let mut columns: Vec<Vec<Cyclotomic<F>>> = pivots
            .iter()
            .map(|&p| {
                (0..dim)
                    .map(|i| {
                        if i == p {
                            Cyclotomic::one()
                        } else {
                            Cyclotomic::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        columns.extend(radical);
        let change = Matrix::from_columns(dim, &columns);
        let back = inverse(&change)
            .ok_or_else(|| Error::Internal("radical complement is singular".into()))?;
        let k = pivots.len();
        let generators = self
            .generators
            .iter()
            .map(|m| {
                let full = back.mul(&m.mul(&change));
                Matrix::from_fn(k, k, |i, j| full[(i, j)].clone())
            })
            .collect();
        Ok(Some(SpecializedModule {
            shape: self.shape.clone(),
            generators,
            gram: None,
        }))
    }

    /// `tr(T_w)` for every group element `w`, via reduced words.
    pub fn traces(&self, basis: &KlBasis) -> Vec<Cyclotomic<F>> {
        let g = basis.group();
        let dim = self.dim();
        (0..g.order())
            .map(|w| {
                g.reduced_word(w)
                    .iter()
                    .fold(Matrix::identity(dim), |acc, &s| {
                        acc.mul(&self.generators[s])
                    })
                    .trace()
            })
            .collect()
    }
}

/// Integer matrix `[kS_λ : D_μ]`, rows `Bip(n)`, columns the labels of the simples.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DecompositionNumbers {
    pub rows: Vec<Bipartition>,
    pub columns: Vec<Bipartition>,
    pub entries: Vec<Vec<i64>>,
}

impl DecompositionNumbers {
    pub fn entry(&self, row: &Bipartition, col: &Bipartition) -> Option<i64> {
        let i = self.rows.iter().position(|x| x == row)?;
        let j = self.columns.iter().position(|x| x == col)?;
        Some(self.entries[i][j])
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::from("λ\\μ");
        for c in &self.columns {
            out.push('\t');
            out.push_str(&c.to_string());
        }
        out.push('\n');
        for (row, vals) in self.rows.iter().zip(&self.entries) {
            out.push_str(&row.to_string());
            for v in vals {
                out.push('\t');
                out.push_str(&v.to_string());
            }
            out.push('\n');
        }
        out
    }
}

/// Cell datum together with every cell module `S_λ`, `λ ∈ Bip(n)`.
pub struct SpechtData {
    datum: CellDatum,
    modules: Vec<CellModuleData>,
}

impl SpechtData {
    pub fn new(n: usize, xi: XiOrder, bounds: &Bounds) -> Result<Self> {
        Bounds::check("specht", n, bounds.specht)?;
        let basis = Arc::new(kl_basis(n, xi, bounds)?);
        Self::from_datum(cell_datum(basis)?)
    }

    pub fn from_datum(datum: CellDatum) -> Result<Self> {
        let modules = datum
            .shapes()
            .par_iter()
            .map(|l| cell_module(l, &datum))
            .collect::<Result<Vec<_>>>()?;
        Ok(SpechtData { datum, modules })
    }

    pub fn datum(&self) -> &CellDatum {
        &self.datum
    }

    pub fn modules(&self) -> &[CellModuleData] {
        &self.modules
    }

    pub fn module(&self, lambda: &Bipartition) -> Option<&CellModuleData> {
        self.modules.iter().find(|m| &m.shape == lambda)
    }

    /// `{λ : D_λ ≠ 0}` in enumeration order.
    pub fn nonzero_simples<F: Field + Send + Sync>(
        &self,
        spec: &Specialization<F>,
    ) -> Vec<Bipartition> {
        self.modules
            .par_iter()
            .filter(|m| m.specialize(spec).gram_rank() > 0)
            .map(|m| m.shape.clone())
            .collect()
    }

    /// `[kS_λ : D_μ]` by the trace method.
    pub fn decomposition_numbers<F>(&self, spec: &Specialization<F>) -> Result<DecompositionNumbers>
    where
        F: Field + AsInteger + Send + Sync,
    {
        let basis = self.datum.basis();
        let specialized: Vec<SpecializedModule<F>> = self
            .modules
            .par_iter()
            .map(|m| m.specialize(spec))
            .collect();
        let cell_traces: Vec<Vec<Cyclotomic<F>>> =
            specialized.par_iter().map(|m| m.traces(basis)).collect();
        let mut columns = Vec::new();
        let mut simple_traces = Vec::new();
        for m in &specialized {
            if let Some(d) = m.simple_head()? {
                columns.push(m.shape.clone());
                simple_traces.push(d.traces(basis));
            }
        }
        let order = basis.group().order();
        let x = Matrix::from_columns(order, &simple_traces);
        if rank(&x) != columns.len() {
            return Err(Error::RankDeficiency);
        }
        let mut entries = Vec::with_capacity(specialized.len());
        for (m, y) in specialized.iter().zip(&cell_traces) {
            let sol = solve_unique(&x, y).ok_or_else(|| {
                Error::Internal(format!(
                    "trace of S_{} is not a combination of simple traces",
                    m.shape
                ))
            })?;
            let row = sol
                .iter()
                .map(|c| {
                    c.as_integer().filter(|&k| k >= 0).ok_or_else(|| {
                        Error::Internal(format!(
                            "multiplicity {c:?} in S_{} is not a natural number",
                            m.shape
                        ))
                    })
                })
                .collect::<Result<Vec<i64>>>()?;
            entries.push(row);
        }
        Ok(DecompositionNumbers {
            rows: self.modules.iter().map(|m| m.shape.clone()).collect(),
            columns,
            entries,
        })
    }
}

pub fn nonzero_simples<F: Field + Send + Sync>(
    n: usize,
    spec: &Specialization<F>,
    xi: XiOrder,
    bounds: &Bounds,
) -> Result<Vec<Bipartition>> {
    Ok(SpechtData::new(n, xi, bounds)?.nonzero_simples(spec))
}

pub fn decomposition_numbers<F: Field + AsInteger + Send + Sync>(
    n: usize,
    spec: &Specialization<F>,
    xi: XiOrder,
    bounds: &Bounds,
) -> Result<DecompositionNumbers> {
    SpechtData::new(n, xi, bounds)?.decomposition_numbers(spec)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    /// The cell datum could not be built because Conjecture A failed.
    Blocked,
}

impl fmt::Display for CheckStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckStatus::Pass => "pass",
            CheckStatus::Fail => "fail",
            CheckStatus::Blocked => "blocked",
        })
    }
}

pub const CELL_MODULE_ASSUMPTION: &str =
    "rows are labelled assuming the generic cell module of shape λ is the simple module V_λ (Conjecture B′)";

#[derive(Clone, Debug, Serialize)]
pub struct Theorem41Report {
    pub n: usize,
    pub e: usize,
    pub d: i64,
    pub r: usize,
    pub xi: String,
    pub charge: Charge,
    pub status: CheckStatus,
    pub simples: Vec<Bipartition>,
    pub uglov: Vec<Bipartition>,
    pub simples_match: bool,
    pub decomposition_numbers: Option<DecompositionNumbers>,
    /// `d^s_{λμ}(1)`, same row and column labels as the canonical basis.
    pub expected: Vec<Vec<i64>>,
    pub expected_columns: Vec<Bipartition>,
    pub matrices_match: bool,
    pub assumption: &'static str,
    pub detail: Option<String>,
}

impl Theorem41Report {
    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

/// Compares `{λ : D_λ ≠ 0}` and `[kS_λ : D_μ]` at `ξ = r + 1/2` with the
/// Uglov set and `d^s(1)` for `s = charge_from(r, d, e)`.
pub fn theorem41_check(
    n: usize,
    e: usize,
    d: i64,
    r: usize,
    bounds: &Bounds,
) -> Result<Theorem41Report> {
    Bounds::check("specht", n, bounds.specht)?;
    let xi = XiOrder::from_r(r);
    let s = charge_from(r, d, e);
    let uglov = uglov_bipartitions(n, s, e, bounds)?;
    let expected_matrix = decomposition_matrix(n, s, e, bounds)?;
    let mut report = Theorem41Report {
        n,
        e,
        d,
        r,
        xi: xi.to_string(),
        charge: s,
        status: CheckStatus::Fail,
        simples: Vec::new(),
        uglov: uglov.clone(),
        simples_match: false,
        decomposition_numbers: None,
        expected: expected_matrix.at_one(),
        expected_columns: expected_matrix.columns.clone(),
        matrices_match: false,
        assumption: CELL_MODULE_ASSUMPTION,
        detail: None,
    };
    let basis = Arc::new(kl_basis(n, xi, bounds)?);
    let datum = match cell_datum(basis) {
        Ok(d) => d,
        Err(Error::ConjectureAViolation(msg)) => {
            report.status = CheckStatus::Blocked;
            report.detail = Some(msg);
            return Ok(report);
        }
        Err(err) => return Err(err),
    };
    let data = SpechtData::from_datum(datum)?;
    let spec = CycloSpecialization::root_of_unity(e, d);
    report.simples = data.nonzero_simples(&spec);
    report.simples_match = report.simples == uglov;
    let numbers = data.decomposition_numbers(&spec)?;
    report.matrices_match = numbers.rows == expected_matrix.rows
        && numbers.columns == expected_matrix.columns
        && numbers.entries == report.expected;
    report.decomposition_numbers = Some(numbers);
    if report.simples_match && report.matrices_match {
        report.status = CheckStatus::Pass;
    } else {
        report.detail = Some(format!(
            "simples {:?} vs Uglov {:?}",
            report
                .simples
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>(),
            report
                .uglov
                .iter()
                .map(|b| b.to_string())
                .collect::<Vec<_>>()
        ));
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn data(n: usize, r: usize) -> SpechtData {
        SpechtData::new(n, XiOrder::from_r(r), &Bounds::default()).unwrap()
    }

    #[test]
    fn specialization_conditions() {
        for e in 2..=4usize {
            for d in 0..e as i64 {
                let sp = CycloSpecialization::root_of_unity(e, d);
                let q2 = sp.q().clone() * sp.q().clone();
                let zeta_e = Cyclotomic::zeta_power(4 * e as u32, 4);
                assert_eq!(q2, zeta_e);
                let big_q2 = sp.big_q().clone() * sp.big_q().clone();
                assert_eq!(big_q2, -power(&q2, d as i32));
            }
        }
    }

    #[test]
    fn rank_one_modules() {
        let sd = data(1, 0);
        assert_eq!(sd.modules().len(), 2);
        for m in sd.modules() {
            assert_eq!(m.dim(), 1);
            assert!(m.adjointness_holds());
            assert!(m.gram.is_symmetric());
        }
        let spec = CycloSpecialization::root_of_unity(2, 0);
        let simples = sd.nonzero_simples(&spec);
        assert_eq!(simples, vec!["(1;∅)".parse::<Bipartition>().unwrap()]);
        let generic = sd.nonzero_simples(&CycloSpecialization::generic());
        assert_eq!(generic.len(), 2);
        let dn = sd.decomposition_numbers(&spec).unwrap();
        assert_eq!(dn.entries, vec![vec![1], vec![1]]);
    }

    #[test]
    fn dimensions_and_generic_identity() {
        let sd = data(2, 0);
        for m in sd.modules() {
            assert_eq!(m.dim(), crate::domino::standard_bitableaux(&m.shape).len());
            assert!(m.adjointness_holds());
        }
        let mixed = sd.module(&"(1;1)".parse().unwrap()).unwrap();
        assert_eq!(mixed.dim(), 2);
        let dn = sd
            .decomposition_numbers(&CycloSpecialization::generic())
            .unwrap();
        let k = dn.rows.len();
        for i in 0..k {
            for j in 0..k {
                assert_eq!(dn.entries[i][j], (i == j) as i64);
            }
        }
    }
}
