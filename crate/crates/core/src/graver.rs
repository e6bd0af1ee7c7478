//! Graver bases by completion, primitive subsets, circuits and pointedness.
//!
//! The completion starts from a kernel lattice basis and repeatedly adds the
//! normal forms of pairwise sums until every sum reduces to zero. Reduction
//! subtracts any element conformally below the current vector, so the final
//! set contains every conformally minimal kernel vector.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{BudgetKind, Error, Result};
use crate::integer::Integer;
use crate::linalg::{kernel_lattice, IntMat, IntVec};

/// Resource caps for a single Graver computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of candidate sums generated.
    pub max_candidates: usize,
    pub max_time: Duration,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_candidates: 2_000_000,
            max_time: Duration::from_secs(600),
        }
    }
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget {
            max_candidates: usize::MAX,
            max_time: Duration::MAX,
        }
    }
}

/// The Graver basis of a matrix: one sign-canonical representative per `±u`,
/// sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraverBasis {
    pub ambient: usize,
    pub elements: Vec<IntVec>,
    pub matrix_hash: String,
}

impl GraverBasis {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Membership up to sign.
    pub fn contains(&self, u: &IntVec) -> bool {
        self.elements.binary_search(&u.sign_canonical()).is_ok()
    }

    /// Every element together with its negation.
    pub fn symmetric(&self) -> impl Iterator<Item = IntVec> + '_ {
        self.elements.iter().flat_map(|g| [g.clone(), -g])
    }

    /// Output format: `"count n"` header then one element per line.
    pub fn to_text(&self) -> String {
        vectors_to_text(&self.elements, self.ambient)
    }
}

/// Writes a list of vectors in the matrix text format (`count n` header).
pub fn vectors_to_text(vectors: &[IntVec], n: usize) -> String {
    IntMat::from_int_rows(vectors, n)
        .expect("uniform length")
        .to_text()
}

/// Sorted, deduplicated sign-canonical representatives.
pub fn canonical_set<I: IntoIterator<Item = IntVec>>(vectors: I) -> Vec<IntVec> {
    let mut out: Vec<IntVec> = vectors
        .into_iter()
        .filter(|v| !v.is_zero())
        .map(|v| v.sign_canonical())
        .collect();
    out.sort();
    out.dedup();
    out
}

#[derive(Clone)]
struct Elem {
    v: IntVec,
    pos: u64,
    neg: u64,
}

impl Elem {
    fn new(v: IntVec) -> Self {
        let (pos, neg) = sign_masks(&v);
        Elem { v, pos, neg }
    }
}

/// Sign bitmasks over the first 64 coordinates. Used only as a necessary
/// filter; the full comparison is always performed afterwards.
fn sign_masks(v: &IntVec) -> (u64, u64) {
    let (mut pos, mut neg) = (0u64, 0u64);
    for (i, x) in v.iter().enumerate().take(64) {
        if x.is_positive() {
            pos |= 1 << i;
        } else if x.is_negative() {
            neg |= 1 << i;
        }
    }
    (pos, neg)
}

/// Elements grouped by sign pattern, so a reducer search tests each pattern once.
#[derive(Default)]
struct Reducer {
    elems: Vec<Elem>,
    groups: Vec<(u64, u64, Vec<usize>)>,
    index: HashMap<(u64, u64), usize>,
}

impl Reducer {
    fn insert(&mut self, v: IntVec) -> usize {
        let e = Elem::new(v);
        let key = (e.pos, e.neg);
        let id = self.elems.len();
        let g = *self.index.entry(key).or_insert_with(|| {
            self.groups.push((key.0, key.1, Vec::new()));
            self.groups.len() - 1
        });
        self.groups[g].2.push(id);
        self.elems.push(e);
        id
    }

    /// An element `g` (with sign) such that `±g ⊑ h`, skipping `skip`.
    fn find(&self, h: &IntVec, skip: Option<usize>) -> Option<(usize, bool)> {
        let (hp, hn) = sign_masks(h);
        for (pos, neg, ids) in &self.groups {
            let plus = pos & !hp == 0 && neg & !hn == 0;
            let minus = pos & !hn == 0 && neg & !hp == 0;
            if !plus && !minus {
                continue;
            }
            for &id in ids {
                if Some(id) == skip {
                    continue;
                }
                let g = &self.elems[id].v;
                if plus && g.conformally_below(h) {
                    return Some((id, true));
                }
                if minus && below_negated(g, h) {
                    return Some((id, false));
                }
            }
        }
        None
    }

    /// Reduces `h` until no element is conformally below it.
    fn normal_form(&self, mut h: IntVec) -> IntVec {
        while !h.is_zero() {
            let Some((id, plus)) = self.find(&h, None) else {
                break;
            };
            let g = &self.elems[id].v;
            // subtract the largest multiple that stays conformally below h
            let k = g
                .iter()
                .zip(h.iter())
                .filter(|(x, _)| !x.is_zero())
                .map(|(x, y)| y.abs().div_floor(&x.abs()))
                .min()
                .expect("reducers are nonzero");
            let step = if plus { g.scale(&k) } else { g.scale(&-&k) };
            h = &h - &step;
        }
        h
    }
}

/// `−g ⊑ h`.
fn below_negated(g: &IntVec, h: &IntVec) -> bool {
    g.iter().zip(h.iter()).all(|(a, b)| match a.signum() {
        0 => true,
        1 => b <= &-a,
        _ => b >= &-a,
    })
}

/// Shortens a lattice basis by greedy pairwise size reduction. The lattice is
/// unchanged; shorter seeds make the completion considerably cheaper.
fn reduce_seed(mut basis: Vec<IntVec>) -> Vec<IntVec> {
    let norm2 = |v: &IntVec| v.dot(v);
    loop {
        let mut changed = false;
        for i in 0..basis.len() {
            for j in 0..basis.len() {
                if i == j {
                    continue;
                }
                let nj = norm2(&basis[j]);
                if nj.is_zero() {
                    continue;
                }
                let q = basis[i].dot(&basis[j]).div_round(&nj);
                if q.is_zero() {
                    continue;
                }
                let cand = &basis[i] - &basis[j].scale(&q);
                if norm2(&cand) < norm2(&basis[i]) {
                    basis[i] = cand;
                    changed = true;
                }
            }
        }
        if !changed {
            return basis;
        }
    }
}

fn norm_key(v: &IntVec) -> u128 {
    v.iter()
        .map(|x| x.abs().to_i64().map_or(u128::MAX / 1024, |a| a as u128))
        .fold(0u128, u128::saturating_add)
}

/// Completion from a generating set of a lattice. Returns the conformally
/// minimal elements (sign-canonical, sorted).
pub fn graver_completion(generators: Vec<IntVec>, budget: &Budget) -> Result<Vec<IntVec>> {
    let start = Instant::now();
    let mut red = Reducer::default();
    let mut heap: BinaryHeap<Reverse<(u128, u32, u32, bool)>> = BinaryHeap::new();
    let mut generated = 0usize;

    let push_pairs = |red: &Reducer,
                      heap: &mut BinaryHeap<Reverse<(u128, u32, u32, bool)>>,
                      generated: &mut usize,
                      k: usize|
     -> Result<()> {
        let f = &red.elems[k];
        for (i, g) in red.elems.iter().enumerate().take(k + 1) {
            // f + g is interesting only with cancellation somewhere
            if (f.pos & g.neg) != 0 || (f.neg & g.pos) != 0 || !f.v.sign_compatible(&g.v) {
                heap.push(Reverse((
                    norm_key(&(&f.v + &g.v)),
                    i as u32,
                    k as u32,
                    true,
                )));
                *generated += 1;
            }
            // f − g likewise needs f and g to agree in sign somewhere
            if i != k
                && ((f.pos & g.pos) != 0 || (f.neg & g.neg) != 0 || !f.v.sign_compatible(&-&g.v))
            {
                heap.push(Reverse((
                    norm_key(&(&f.v - &g.v)),
                    i as u32,
                    k as u32,
                    false,
                )));
                *generated += 1;
            }
        }
        if *generated > budget.max_candidates {
            return Err(Error::BudgetExceeded {
                kind: BudgetKind::Elements(budget.max_candidates),
                generated: *generated,
            });
        }
        Ok(())
    };

    for g in generators {
        let nf = red.normal_form(g);
        if nf.is_zero() {
            continue;
        }
        let k = red.insert(nf.sign_canonical());
        push_pairs(&red, &mut heap, &mut generated, k)?;
    }

    let mut steps = 0usize;
    while let Some(Reverse((_, i, k, plus))) = heap.pop() {
        steps += 1;
        if steps.is_multiple_of(256) && start.elapsed() > budget.max_time {
            return Err(Error::BudgetExceeded {
                kind: BudgetKind::Time(budget.max_time),
                generated,
            });
        }
        let (f, g) = (&red.elems[k as usize].v, &red.elems[i as usize].v);
        let s = if plus { f + g } else { f - g };
        let nf = red.normal_form(s);
        if nf.is_zero() {
            continue;
        }
        let k = red.insert(nf.sign_canonical());
        push_pairs(&red, &mut heap, &mut generated, k)?;
    }

    let minimal = red
        .elems
        .iter()
        .enumerate()
        .filter(|(id, e)| red.find(&e.v, Some(*id)).is_none())
        .map(|(_, e)| e.v.clone());
    Ok(canonical_set(minimal))
}

/// Graver basis with the default budget.
pub fn graver_basis(a: &IntMat) -> Result<GraverBasis> {
    graver_basis_with(a, &Budget::default())
}

pub fn graver_basis_with(a: &IntMat, budget: &Budget) -> Result<GraverBasis> {
    let basis = kernel_lattice(a);
    let elements = graver_completion(reduce_seed(basis.vectors), budget)?;
    Ok(GraverBasis {
        ambient: a.cols(),
        elements,
        matrix_hash: basis.matrix_hash,
    })
}

/// `u` is primitive in `set`: no other `v ∈ set` with `v⁺ ≤ u⁺`, `v⁻ ≤ u⁻`.
pub fn is_primitive_in(u: &IntVec, set: &[IntVec]) -> Result<bool> {
    if !set.contains(u) {
        return Err(Error::NotMember);
    }
    if let Some(v) = set.iter().find(|v| v.len() != u.len()) {
        return Err(Error::LengthMismatch(u.len(), v.len()));
    }
    Ok(!set.iter().any(|v| v != u && v.conformally_below(u)))
}

/// `Graver(S)`: the primitive elements of `S`, in their original order.
pub fn graver_of_set(set: &[IntVec]) -> Vec<IntVec> {
    let mut out: Vec<IntVec> = Vec::new();
    for u in set {
        let primitive = !set.iter().any(|v| v != u && v.conformally_below(u));
        if primitive && !out.contains(u) {
            out.push(u.clone());
        }
    }
    out
}

/// Circuits of a matrix: primitive kernel vectors of inclusion-minimal support.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CircuitSet {
    pub ambient: usize,
    pub elements: Vec<IntVec>,
}

impl CircuitSet {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, u: &IntVec) -> bool {
        self.elements.binary_search(&u.sign_canonical()).is_ok()
    }

    pub fn to_text(&self) -> String {
        vectors_to_text(&self.elements, self.ambient)
    }
}

/// The `{i, j}` circuit of a row vector with nonzero entries `n_i`, `n_j`
/// (0-based slots): `n_j/g` at `i`, `−n_i/g` at `j`.
pub fn pair_circuit(t: &[Integer], i: usize, j: usize) -> IntVec {
    let g = t[i].gcd(&t[j]);
    let mut v = IntVec::zeros(t.len());
    v[i] = t[j].div_exact(&g);
    v[j] = -t[i].div_exact(&g);
    v.sign_canonical()
}

pub fn circuits(a: &IntMat) -> CircuitSet {
    let n = a.cols();
    if a.rows() == 1 && a.entries().iter().all(|x| !x.is_zero()) {
        let t = a.entries();
        let elements =
            canonical_set((0..n).flat_map(|i| (i + 1..n).map(move |j| pair_circuit(t, i, j))));
        return CircuitSet {
            ambient: n,
            elements,
        };
    }
    let rank = a.rank();
    let mut found: Vec<IntVec> = Vec::new();
    let mut supports: Vec<u128> = Vec::new();
    for size in 1..=(rank + 1).min(n) {
        for subset in subsets(n, size) {
            let mask: u128 = subset.iter().fold(0, |m, &i| m | (1u128 << (i % 128)));
            // a strictly smaller circuit support inside the subset rules it out
            if n <= 128 && supports.iter().any(|&s| s & !mask == 0) {
                continue;
            }
            let sub = a.select_columns(&subset);
            let ker = kernel_lattice(&sub);
            if ker.rank() != 1 {
                continue;
            }
            let k = &ker.vectors[0];
            if k.iter().any(Integer::is_zero) {
                continue;
            }
            let mut v = IntVec::zeros(n);
            for (slot, &col) in subset.iter().enumerate() {
                v[col] = k[slot].clone();
            }
            supports.push(mask);
            found.push(v.primitive());
        }
    }
    CircuitSet {
        ambient: n,
        elements: canonical_set(found),
    }
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(cur.clone());
        let Some(pos) = (0..k).rev().find(|&p| cur[p] < n - k + p) else {
            return out;
        };
        cur[pos] += 1;
        for q in pos + 1..k {
            cur[q] = cur[q - 1] + 1;
        }
    }
}

/// `Ker_Z(A) ∩ N^n = {0}`, decided on the Graver basis: a nonzero non-negative
/// kernel vector exists iff a conformally minimal one does.
pub fn assert_pointed(_a: &IntMat, g: &GraverBasis) -> bool {
    !g.elements
        .iter()
        .any(|u| u.is_nonnegative() || (-u).is_nonnegative())
}
