//! Counting ordered 2s-tuples with equal sums of polynomial values.
//!
//! For s in {2, 3} and a domain D, a solution is an ordered tuple
//! (x_1..x_s | x_(s+1)..x_(2s)) in D^(2s) with
//! f(x_1)+...+f(x_s) = f(x_(s+1))+...+f(x_(2s)). Solutions are classified by
//! how the two sides overlap:
//!
//! * TRIVIAL  - the right side is a permutation of the left (equal multisets);
//! * SHARED   - not trivial, but some value appears on both sides;
//! * DISJOINT - the two sides are disjoint as sets.
//!
//! The enumerator is a meet-in-the-middle self-join: one table of all
//! s-element multisets keyed by their exact big-integer value sum, sorted and
//! scanned in equal-key groups. Ordered counts are recovered from multiset
//! counts by multinomial weights, so no 2s-fold loop ever runs. The brute
//! oracle in [`crate::oracle`] does run that loop, which is the point: two
//! independent routes to every published number.

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::depress::{image_domain, DepressedForm};
use crate::domain::Domain;
use crate::poly::IntPolynomial;
use crate::{EnumerationError, PolyError};

pub const DEFAULT_MEMORY_BUDGET: u64 = 2 * 1024 * 1024 * 1024;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SolutionClass {
    Trivial,
    Shared,
    Disjoint,
}

impl SolutionClass {
    pub fn as_str(self) -> &'static str {
        match self {
            SolutionClass::Trivial => "TRIVIAL",
            SolutionClass::Shared => "SHARED",
            SolutionClass::Disjoint => "DISJOINT",
        }
    }
}

/// One ordered solution; `lhs` and `rhs` each hold s coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionRecord {
    pub lhs: Vec<i64>,
    pub rhs: Vec<i64>,
    pub class: SolutionClass,
}

/// Exact ordered-tuple counts; `total = trivial + shared + disjoint` by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountSummary {
    pub polynomial: IntPolynomial,
    pub s: u8,
    pub b: u64,
    pub total: u64,
    pub trivial: u64,
    pub shared: u64,
    pub disjoint: u64,
}

impl CountSummary {
    pub fn nontrivial(&self) -> u64 {
        self.shared + self.disjoint
    }

    pub fn partition_holds(&self) -> bool {
        self.total == self.trivial + self.shared + self.disjoint
    }
}

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub summary: CountSummary,
    /// Present when emission was requested; lexicographically sorted.
    pub solutions: Option<Vec<SolutionRecord>>,
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub emit_solutions: bool,
    pub memory_budget: u64,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions {
            emit_solutions: false,
            memory_budget: DEFAULT_MEMORY_BUDGET,
        }
    }
}

/// Classify one ordered solution by side overlap. Lengths must match.
pub fn classify(lhs: &[i64], rhs: &[i64]) -> Result<SolutionClass, EnumerationError> {
    if lhs.len() != rhs.len() || lhs.is_empty() {
        return Err(EnumerationError::LengthMismatch {
            lhs: lhs.len(),
            rhs: rhs.len(),
        });
    }
    let mut a = lhs.to_vec();
    let mut b = rhs.to_vec();
    a.sort_unstable();
    b.sort_unstable();
    if a == b {
        return Ok(SolutionClass::Trivial);
    }
    // sorted-merge intersection test
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => return Ok(SolutionClass::Shared),
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    Ok(SolutionClass::Disjoint)
}

/// Closed-form count of TRIVIAL ordered 2s-tuples over a domain of size B.
/// Independent of the polynomial: permutation pairs of every multiset.
pub fn trivial_count(s: u8, b: u64) -> Result<u64, EnumerationError> {
    if b == 0 {
        return Err(EnumerationError::EmptyDomain);
    }
    let b = b as u128;
    let count = match s {
        2 => 2 * b * b - b,
        3 => 6 * b * (b - 1) * (b.saturating_sub(2)) + 9 * b * (b - 1) + b,
        other => return Err(EnumerationError::UnsupportedS(other)),
    };
    u64::try_from(count).map_err(|_| EnumerationError::MachineRange)
}

/// All unordered pairs a < b in the domain with g(a) = g(b), sorted.
pub fn coincidence_pairs(
    g: &IntPolynomial,
    domain: &Domain,
) -> Result<Vec<(i64, i64)>, EnumerationError> {
    let points = domain.points()?;
    let mut valued: Vec<(BigInt, i64)> = points
        .par_iter()
        .map(|&p| (g.eval_i64(p), p))
        .collect();
    valued.sort_unstable();
    let mut pairs = Vec::new();
    let mut i = 0;
    while i < valued.len() {
        let mut j = i + 1;
        while j < valued.len() && valued[j].0 == valued[i].0 {
            j += 1;
        }
        for a in i..j {
            for b in (a + 1)..j {
                pairs.push((valued[a].1, valued[b].1));
            }
        }
        i = j;
    }
    pairs.sort_unstable();
    Ok(pairs)
}

/// Enumerate over the box {1..B}.
pub fn enumerate(
    f: &IntPolynomial,
    s: u8,
    b: u64,
    opts: &EnumerateOptions,
) -> Result<Enumeration, EnumerationError> {
    enumerate_on_domain(f, s, &Domain::Box { bound: b }, opts)
}

/// Enumerate the depressed polynomial over the image progression of {1..B}.
/// Counts of every class agree with enumerating the original polynomial over
/// the box, because the depression map is a sum-preserving bijection.
pub fn enumerate_on_image(
    form: &DepressedForm,
    s: u8,
    b: u64,
    opts: &EnumerateOptions,
) -> Result<Enumeration, EnumerationError> {
    let img = image_domain(&form.map, b).map_err(|e| match e {
        PolyError::MachineRange => EnumerationError::MachineRange,
        _ => EnumerationError::EmptyDomain,
    })?;
    enumerate_on_domain(&form.g, s, &Domain::from(&img), opts)
}

const NO_IDX: u32 = u32::MAX;

/// Meet-in-the-middle enumeration over an arbitrary domain.
pub fn enumerate_on_domain(
    f: &IntPolynomial,
    s: u8,
    domain: &Domain,
    opts: &EnumerateOptions,
) -> Result<Enumeration, EnumerationError> {
    if !matches!(s, 2 | 3) {
        return Err(EnumerationError::UnsupportedS(s));
    }
    let points = domain.points()?;
    let values: Vec<BigInt> = points.par_iter().map(|&p| f.eval_i64(p)).collect();
    check_memory_budget(&values, s, opts.memory_budget)?;

    // Sum table over multisets {i <= j (<= k)} of point indices, built in
    // parallel stripes of the first index and sorted by (sum, indices) for a
    // deterministic group order.
    let n = points.len();
    let mut table: Vec<(BigInt, [u32; 3])> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut stripe = Vec::new();
            for j in i..n {
                let ij = &values[i] + &values[j];
                if s == 2 {
                    stripe.push((ij, [i as u32, j as u32, NO_IDX]));
                } else {
                    for k in j..n {
                        stripe.push((&ij + &values[k], [i as u32, j as u32, k as u32]));
                    }
                }
            }
            stripe
        })
        .flatten()
        .collect();
    table.par_sort_unstable();

    let s_usize = s as usize;
    let mut total = 0u64;
    let mut trivial = 0u64;
    let mut shared = 0u64;
    let mut disjoint = 0u64;
    let mut solutions = opts.emit_solutions.then(Vec::new);
    let is_box = matches!(domain, Domain::Box { .. });

    let mut lo = 0;
    while lo < table.len() {
        let mut hi = lo + 1;
        while hi < table.len() && table[hi].0 == table[lo].0 {
            hi += 1;
        }
        let group = &table[lo..hi];
        for (_, a_idx) in group {
            let a = &a_idx[..s_usize];
            let wa = arrangement_count(a);
            for (_, b_idx) in group {
                let b = &b_idx[..s_usize];
                let class = classify_sorted_indices(a, b);
                let w = wa
                    .checked_mul(arrangement_count(b))
                    .ok_or(EnumerationError::MachineRange)?;
                total = total.checked_add(w).ok_or(EnumerationError::MachineRange)?;
                match class {
                    SolutionClass::Trivial => trivial += w,
                    SolutionClass::Shared => shared += w,
                    SolutionClass::Disjoint => disjoint += w,
                }
                if let Some(out) = solutions.as_mut() {
                    let lhs_pts: Vec<i64> = a.iter().map(|&i| points[i as usize]).collect();
                    let rhs_pts: Vec<i64> = b.iter().map(|&i| points[i as usize]).collect();
                    for lhs in distinct_arrangements(&lhs_pts) {
                        for rhs in distinct_arrangements(&rhs_pts) {
                            if is_box {
                                assert!(
                                    lhs.iter().chain(&rhs).all(|&x| x > 0),
                                    "box solutions must have positive coordinates"
                                );
                            }
                            out.push(SolutionRecord {
                                lhs: lhs.clone(),
                                rhs,
                                class,
                            });
                        }
                    }
                }
            }
        }
        lo = hi;
    }

    if let Some(out) = solutions.as_mut() {
        out.sort_unstable_by(|p, q| (&p.lhs, &p.rhs).cmp(&(&q.lhs, &q.rhs)));
    }

    Ok(Enumeration {
        summary: CountSummary {
            polynomial: f.clone(),
            s,
            b: domain.len(),
            total,
            trivial,
            shared,
            disjoint,
        },
        solutions,
    })
}

/// Number of distinct ordered arrangements of a sorted index multiset:
/// s! over the product of repetition factorials.
fn arrangement_count(sorted: &[u32]) -> u64 {
    match sorted.len() {
        2 => {
            if sorted[0] == sorted[1] {
                1
            } else {
                2
            }
        }
        3 => {
            let (a, b, c) = (sorted[0], sorted[1], sorted[2]);
            if a == b && b == c {
                1
            } else if a == b || b == c {
                3
            } else {
                6
            }
        }
        _ => unreachable!("s is validated to 2 or 3"),
    }
}

/// Classification on sorted index slices; indices are unique per point, so
/// index overlap and value overlap coincide.
fn classify_sorted_indices(a: &[u32], b: &[u32]) -> SolutionClass {
    if a == b {
        return SolutionClass::Trivial;
    }
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Equal => return SolutionClass::Shared,
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
        }
    }
    SolutionClass::Disjoint
}

/// All distinct orderings of a small multiset, lexicographically sorted.
fn distinct_arrangements(pts: &[i64]) -> Vec<Vec<i64>> {
    let mut out: Vec<Vec<i64>> = Vec::new();
    let mut idx: Vec<usize> = (0..pts.len()).collect();
    // Heap's algorithm is overkill at s <= 3; enumerate index permutations.
    permute(&mut idx, 0, &mut |perm| {
        out.push(perm.iter().map(|&i| pts[i]).collect());
    });
    out.sort_unstable();
    out.dedup();
    out
}

fn permute(idx: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == idx.len() {
        visit(idx);
        return;
    }
    for i in k..idx.len() {
        idx.swap(k, i);
        permute(idx, k + 1, visit);
        idx.swap(k, i);
    }
}

/// Estimate the sum-table footprint before building it. The estimate is
/// deliberately coarse (struct overhead plus limb storage for the largest
/// possible key) but errs high, and the error names the largest domain size
/// that would have fit.
fn check_memory_budget(values: &[BigInt], s: u8, budget: u64) -> Result<(), EnumerationError> {
    let n = values.len() as u128;
    let entries = match s {
        2 => n * (n + 1) / 2,
        _ => n * (n + 1) * (n + 2) / 6,
    };
    let max_bits = values.iter().map(|v| v.bits()).max().unwrap_or(1) + 2;
    let per_entry = 40 + 8 * max_bits.div_ceil(64) as u128 + 16;
    let required = entries * per_entry * 23 / 20; // ~15% slack
    if required <= budget as u128 {
        return Ok(());
    }
    // Largest domain size whose table fits under the same per-entry cost.
    let max_entries = budget as u128 / per_entry;
    let mut fits: u64 = 0;
    let mut m = 1u128;
    loop {
        let e = match s {
            2 => m * (m + 1) / 2,
            _ => m * (m + 1) * (m + 2) / 6,
        };
        if e * 23 / 20 > max_entries {
            break;
        }
        fits = m as u64;
        m += 1;
    }
    Err(EnumerationError::MemoryBudgetExceeded {
        required_bytes: required.min(u64::MAX as u128) as u64,
        budget_bytes: budget,
        fits_bound: fits,
    })
}
