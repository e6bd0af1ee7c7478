//! Generalized Lawrence matrices over a monomial curve `T = (n_1, …, n_s)`.
//!
//! Block `j` has `m_j = |c_j|` columns. The top row carries `λ_jt · n_j`
//! where `Σ_t λ_jt c_jt = 1`, and the diagonal block `C(c_j)` has rows
//! `(−c_{j,t+1}, 0, …, c_{j1}, …)` with `c_{j1}` in slot `t + 1`.

use serde::{Deserialize, Serialize};

use crate::bouquet::bouquet_decomposition;
use crate::complex::{normalize_degrees, robust_complex};
use crate::error::{Error, Result};
use crate::integer::Integer;
use crate::linalg::{IntMat, IntVec};

/// Coefficients `λ` with `Σ λ_t c_t = 1`, by a left fold of two-term
/// extended gcds. Once the running gcd reaches 1 the remaining `λ_t` are 0.
pub fn extended_gcd_multi(c: &IntVec) -> Result<IntVec> {
    let Some(first) = c.entries().first() else {
        return Err(Error::InvalidInput("empty coefficient vector".into()));
    };
    let mut g = first.abs();
    let mut lambda = vec![Integer::from(first.signum() as i64)];
    for ct in &c.entries()[1..] {
        if g == 1 {
            lambda.push(Integer::ZERO);
            continue;
        }
        let (ng, x, y) = g.extended_gcd(ct);
        for l in &mut lambda {
            *l = &*l * &x;
        }
        lambda.push(y);
        g = ng;
    }
    if g != 1 {
        return Err(Error::GcdNotOne(g.to_string()));
    }
    Ok(IntVec::new(lambda))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenLawrenceSpec {
    #[serde(rename = "T")]
    pub t: Vec<Integer>,
    pub c: Vec<IntVec>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub lambda: Option<Vec<IntVec>>,
}

impl GenLawrenceSpec {
    pub fn new(t: &[i64], c: &[&[i64]]) -> Self {
        GenLawrenceSpec {
            t: t.iter().map(|&x| Integer::from(x)).collect(),
            c: c.iter().map(|v| IntVec::from_i64s(v)).collect(),
            lambda: None,
        }
    }

    pub fn with_lambda(mut self, lambda: &[&[i64]]) -> Self {
        self.lambda = Some(lambda.iter().map(|v| IntVec::from_i64s(v)).collect());
        self
    }

    /// `(p, q)` with `p = 1 + Σ (m_j − 1)` and `q = Σ m_j`.
    pub fn shape(&self) -> (usize, usize) {
        let q: usize = self.c.iter().map(IntVec::len).sum();
        (1 + q - self.c.len(), q)
    }

    /// Checks the structural invariants and returns the `λ` vectors to use.
    fn resolve_lambda(&self) -> Result<Vec<IntVec>> {
        if self.t.len() != self.c.len() {
            return Err(Error::LengthMismatch(self.t.len(), self.c.len()));
        }
        for (j, cj) in self.c.iter().enumerate() {
            if cj.is_empty() || cj.iter().any(Integer::is_zero) {
                return Err(Error::InvalidInput(format!(
                    "c_{} must have full support",
                    j + 1
                )));
            }
            if !cj[0].is_positive() {
                return Err(Error::InvalidInput(format!(
                    "c_{} must have a positive first entry",
                    j + 1
                )));
            }
            if cj.content() != 1 {
                return Err(Error::GcdNotOne(cj.content().to_string()));
            }
        }
        match &self.lambda {
            None => self.c.iter().map(extended_gcd_multi).collect(),
            Some(lambda) => {
                if lambda.len() != self.c.len() {
                    return Err(Error::LengthMismatch(self.c.len(), lambda.len()));
                }
                for (j, (l, cj)) in lambda.iter().zip(&self.c).enumerate() {
                    if l.len() != cj.len() {
                        return Err(Error::LengthMismatch(cj.len(), l.len()));
                    }
                    if l.dot(cj) != 1 {
                        return Err(Error::InvalidInput(format!(
                            "λ_{} · c_{} ≠ 1",
                            j + 1,
                            j + 1
                        )));
                    }
                }
                Ok(lambda.clone())
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GenLawrenceMatrix {
    /// The spec with `λ` filled in.
    pub spec: GenLawrenceSpec,
    pub matrix: IntMat,
    /// 1-based: column `k` of `matrix` corresponds to column `permutation[k]` of the input.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub permutation: Option<Vec<usize>>,
}

impl GenLawrenceMatrix {
    /// Rearranges a vector indexed like the input columns into this matrix's column order.
    pub fn permute(&self, u: &IntVec) -> IntVec {
        match &self.permutation {
            Some(p) => p.iter().map(|&k| u[k - 1].clone()).collect(),
            None => u.clone(),
        }
    }
}

/// The block matrix for a spec, without the strong-robustness hypothesis check.
pub fn assemble_gen_lawrence(spec: &GenLawrenceSpec) -> Result<GenLawrenceMatrix> {
    let lambda = spec.resolve_lambda()?;
    let (p, q) = spec.shape();
    let mut a = IntMat::zeros(p, q);
    let (mut col, mut row) = (0, 1);
    for ((n, cj), lj) in spec.t.iter().zip(&spec.c).zip(&lambda) {
        for (t, l) in lj.iter().enumerate() {
            a.set(0, col + t, l * n);
        }
        for t in 1..cj.len() {
            a.set(row, col, -&cj[t]);
            a.set(row, col + t, cj[0].clone());
            row += 1;
        }
        col += cj.len();
    }
    let spec = GenLawrenceSpec {
        lambda: Some(lambda),
        ..spec.clone()
    };
    Ok(GenLawrenceMatrix {
        spec,
        matrix: a,
        permutation: None,
    })
}

/// Builds the matrix after checking that every `c_j` outside the vertex of
/// `Δ_T` has a negative entry, which makes the result strongly robust.
pub fn build_gen_lawrence(spec: &GenLawrenceSpec) -> Result<GenLawrenceMatrix> {
    let out = assemble_gen_lawrence(spec)?;
    if spec.t.iter().any(|n| !n.is_positive()) {
        return Err(Error::NegativeEntry);
    }
    if spec.t.len() >= 3 {
        let t = IntMat::from_vec(1, spec.t.len(), spec.t.clone())?;
        let vertex = robust_complex(&t)?.vertex();
        for (j, cj) in spec.c.iter().enumerate() {
            if Some(j + 1) != vertex && cj.is_nonnegative() {
                return Err(Error::HypothesisViolation(format!(
                    "c_{} has no negative entry and {} is not the vertex of the robust complex",
                    j + 1,
                    j + 1
                )));
            }
        }
    }
    Ok(out)
}

/// Generalized Lawrence form of a matrix whose bouquet ideal is a monomial
/// curve. Bouquets are ordered by their degree `n_j`, ties by smallest column.
pub fn reconstruct_gen_lawrence(a: &IntMat) -> Result<GenLawrenceMatrix> {
    let dec = bouquet_decomposition(a);
    if let Some(free) = &dec.free {
        return Err(Error::NotMonomialCurve(format!(
            "{} free column(s)",
            free.members.len()
        )));
    }
    if dec.len() < 2 {
        return Err(Error::NotMonomialCurve("fewer than two bouquets".into()));
    }
    if dec.a_b.rank() != 1 {
        return Err(Error::NotMonomialCurve(format!(
            "bouquet matrix has rank {}",
            dec.a_b.rank()
        )));
    }
    let row = dec
        .a_b
        .row_vecs()
        .into_iter()
        .find(|r| !r.is_zero())
        .expect("rank 1 has a nonzero row")
        .primitive();
    if row.iter().any(Integer::is_zero) {
        return Err(Error::NotMonomialCurve(format!(
            "degrees {row} have a zero entry"
        )));
    }
    // non-mixed bouquets fix the overall sign; otherwise the majority does
    let fixed: Vec<bool> = dec
        .bouquets
        .iter()
        .zip(row.iter())
        .filter(|(b, _)| !b.is_mixed())
        .map(|(_, d)| d.is_positive())
        .collect();
    let flip = match fixed.first() {
        Some(&p) => !p,
        None => 2 * row.iter().filter(|d| d.is_negative()).count() > row.len(),
    };
    let row = if flip { -row } else { row };
    // a bouquet of negative degree is read with the opposite orientation,
    // led by its first column with a positive coefficient
    let mut blocks: Vec<(Vec<usize>, IntVec)> = Vec::with_capacity(dec.len());
    for (b, d) in dec.bouquets.iter().zip(row.iter()) {
        if d.is_positive() {
            blocks.push((b.members.clone(), b.c.clone()));
            continue;
        }
        let c = -&b.c;
        let Some(lead) = c.iter().position(Integer::is_positive) else {
            return Err(Error::NotMonomialCurve(format!(
                "degrees {row} are not all positive"
            )));
        };
        let mut slots: Vec<usize> = vec![lead];
        slots.extend((0..c.len()).filter(|&k| k != lead));
        blocks.push((
            slots.iter().map(|&k| b.members[k]).collect(),
            slots.iter().map(|&k| c[k].clone()).collect(),
        ));
    }
    let row: IntVec = row.iter().map(Integer::abs).collect();
    let t = normalize_degrees(&IntMat::from_int_rows(&[row], dec.len())?)?.row(0);

    let mut order: Vec<usize> = (0..dec.len()).collect();
    order.sort_by(|&x, &y| {
        t[x].cmp(&t[y])
            .then(dec.bouquets[x].anchor().cmp(&dec.bouquets[y].anchor()))
    });

    let spec = GenLawrenceSpec {
        t: order.iter().map(|&j| t[j].clone()).collect(),
        c: order.iter().map(|&j| blocks[j].1.clone()).collect(),
        lambda: None,
    };
    let permutation = order
        .iter()
        .flat_map(|&j| blocks[j].0.iter().map(|&k| k + 1))
        .collect();
    let mut out = assemble_gen_lawrence(&spec)?;
    out.permutation = Some(permutation);
    Ok(out)
}
