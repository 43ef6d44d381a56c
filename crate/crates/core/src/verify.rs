//! Executable verification: counting identities, independent brute-force
//! oracles for each family, and a suite that exercises every bijection
//! exhaustively at desk scale.
//!
//! The oracle generators work straight from the family definitions and
//! never touch the constructors, so set equality against the
//! constructor-driven enumeration is a real cross-check.

use std::collections::{BTreeSet, HashSet};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::Mutex;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::alpha::alpha;
use crate::beta::{beta, beta_inv, check_beta_rules};
use crate::classical::{
    arcs_to_planar, binary_to_tiling, induced, planar_to_arcs, tiling_to_binary,
};
use crate::codec::{parse_arcs, parse_binary, parse_planar, parse_term, parse_tiling, parse_tree};
use crate::error::Error;
use crate::model::{
    ArcTree, BinaryTree, Family, PlanarTree, Rect, RightSweptTree, Shape, StaircaseTiling,
};
use crate::terms::{
    decompose, enum_terms, eval, for_each_term, random_term, term_of, Constructible, Decomposed,
    OpKind,
};

/// Largest n with a 64-bit Catalan number.
pub const MAX_CATALAN_N: usize = 35;

/// Catalan number by Segner's recursion.
pub fn catalan(n: usize) -> Result<u64, Error> {
    if n > MAX_CATALAN_N {
        return Err(Error::Overflow(format!(
            "catalan({n}) exceeds 64 bits; maximum supported n is {MAX_CATALAN_N}"
        )));
    }
    let mut c = vec![0u64; n + 1];
    c[0] = 1;
    for m in 1..=n {
        let mut total: u64 = 0;
        for k in 0..m {
            total = total
                .checked_add(c[k] * c[m - 1 - k])
                .expect("within range for n <= 35");
        }
        c[m] = total;
    }
    Ok(c[n])
}

/// Catalan number by the closed form `(2n choose n) / (n + 1)`.
pub fn catalan_closed_form(n: usize) -> Result<u64, Error> {
    if n > MAX_CATALAN_N {
        return Err(Error::Overflow(format!(
            "catalan({n}) exceeds 64 bits; maximum supported n is {MAX_CATALAN_N}"
        )));
    }
    let mut binom: u128 = 1;
    for k in 1..=n as u128 {
        binom = binom * (n as u128 + k) / k;
    }
    Ok(u64::try_from(binom / (n as u128 + 1)).expect("fits for n <= 35"))
}

fn cat(n: usize) -> u64 {
    catalan(n).expect("suite bounds stay below the overflow limit")
}

// ---------------------------------------------------------------------------
// Independent brute-force generators
// ---------------------------------------------------------------------------

/// Every slot-labeled tree of the given size, filtered by the validator.
pub fn brute_force_trees(n: usize) -> Vec<RightSweptTree> {
    let mut by_size: Vec<Vec<RightSweptTree>> = vec![vec![RightSweptTree::Empty]];
    for m in 1..=n {
        let mut out = Vec::new();
        if m == 1 {
            out.push(RightSweptTree::Leaf);
        }
        for child in &by_size[m - 1] {
            if child.size() == 0 {
                continue;
            }
            out.push(RightSweptTree::mid(child.clone()));
            out.push(RightSweptTree::right(child.clone()));
            out.push(RightSweptTree::left(child.clone()));
        }
        for k in 1..m.saturating_sub(1) {
            for l in &by_size[k] {
                for r in &by_size[m - 1 - k] {
                    out.push(RightSweptTree::left_right(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(out);
    }
    by_size
        .pop()
        .unwrap()
        .into_iter()
        .filter(|t| t.validate().is_empty())
        .collect()
}

/// Every diagonal tiling, by exhaustive search over the top-left corner of
/// the rectangle owning each diagonal cell, with an exact-cover filter.
pub fn brute_force_tilings(n: u32) -> Vec<StaircaseTiling> {
    let mut out = Vec::new();
    let dim = n as usize + 2;
    let mut covered = vec![vec![false; dim]; dim];
    let mut chosen = Vec::with_capacity(n as usize);
    let total_cells = (n * (n + 1) / 2) as usize;
    search_tilings(n, 1, total_cells, &mut covered, &mut chosen, &mut out);
    out
}

fn search_tilings(
    n: u32,
    k: u32,
    uncovered: usize,
    covered: &mut Vec<Vec<bool>>,
    chosen: &mut Vec<Rect>,
    out: &mut Vec<StaircaseTiling>,
) {
    if k > n {
        if uncovered == 0 {
            out.push(StaircaseTiling::new(n, chosen.clone()));
        }
        return;
    }
    // Diagonal cell (k, n + 1 - k) is the bottom-right corner.
    let (r2, c2) = (k, n + 1 - k);
    for r1 in 1..=r2 {
        'corner: for c1 in 1..=c2 {
            for r in r1..=r2 {
                for c in c1..=c2 {
                    if covered[r as usize][c as usize] {
                        continue 'corner;
                    }
                }
            }
            for r in r1..=r2 {
                for c in c1..=c2 {
                    covered[r as usize][c as usize] = true;
                }
            }
            let area = ((r2 - r1 + 1) * (c2 - c1 + 1)) as usize;
            chosen.push(Rect::new(r1, c1, r2, c2));
            search_tilings(n, k + 1, uncovered - area, covered, chosen, out);
            chosen.pop();
            for r in r1..=r2 {
                for c in c1..=c2 {
                    covered[r as usize][c as usize] = false;
                }
            }
        }
    }
}

/// Every non-crossing right-endpoint sequence.
pub fn brute_force_arcs(n: usize) -> Vec<ArcTree> {
    let mut out = Vec::new();
    let mut rend = Vec::with_capacity(n);
    search_arcs(n, &mut rend, &mut out);
    out
}

fn search_arcs(n: usize, rend: &mut Vec<u32>, out: &mut Vec<ArcTree>) {
    let p = rend.len();
    if p == n {
        out.push(ArcTree::new(rend.clone()));
        return;
    }
    'candidate: for q in p as u32 + 1..=n as u32 {
        for (p2, &q2) in rend.iter().enumerate() {
            // Arcs (p2, q2) and (p, q) cross when p2 < p < q2 < q.
            if (p as u32) < q2 && q2 < q && p2 < p {
                continue 'candidate;
            }
        }
        rend.push(q);
        search_arcs(n, rend, out);
        rend.pop();
    }
}

/// Every binary tree with `n` internal nodes.
pub fn brute_force_binaries(n: usize) -> Vec<BinaryTree> {
    let mut by_size: Vec<Vec<BinaryTree>> = vec![vec![BinaryTree::Leaf]];
    for m in 1..=n {
        let mut out = Vec::new();
        for k in 0..m {
            for l in &by_size[k] {
                for r in &by_size[m - 1 - k] {
                    out.push(BinaryTree::node(l.clone(), r.clone()));
                }
            }
        }
        by_size.push(out);
    }
    by_size.pop().unwrap()
}

/// Every planar tree with `n` edges, via the first-child split.
pub fn brute_force_planars(n: usize) -> Vec<PlanarTree> {
    let mut by_size: Vec<Vec<PlanarTree>> = vec![vec![PlanarTree::leaf()]];
    for m in 1..=n {
        let mut out = Vec::new();
        for first_size in 0..m {
            for first in &by_size[first_size] {
                for rest in &by_size[m - 1 - first_size] {
                    let mut children = vec![first.clone()];
                    children.extend(rest.children.iter().cloned());
                    out.push(PlanarTree::node(children));
                }
            }
        }
        by_size.push(out);
    }
    by_size.pop().unwrap()
}

/// Independent oracle for a whole family at size `n`.
pub fn brute_force_family(family: Family, n: usize) -> Vec<Shape> {
    match family {
        Family::Tree => brute_force_trees(n).into_iter().map(Shape::Tree).collect(),
        Family::Tiling => brute_force_tilings(n as u32)
            .into_iter()
            .map(Shape::Tiling)
            .collect(),
        Family::Arcs => brute_force_arcs(n).into_iter().map(Shape::Arcs).collect(),
        Family::Binary => brute_force_binaries(n).into_iter().map(Shape::Binary).collect(),
        Family::Planar => brute_force_planars(n).into_iter().map(Shape::Planar).collect(),
    }
}

/// Every partition of the size-`n` staircase into exactly `n` rectangles,
/// with no diagonal requirement. Rectangle lists are sorted by top-left
/// corner for set comparison.
pub fn brute_force_rectangulations(n: u32) -> Vec<Vec<Rect>> {
    let total_cells = (n * (n + 1) / 2) as usize;
    let dim = n as usize + 2;
    let mut covered = vec![vec![false; dim]; dim];
    let mut chosen = Vec::new();
    let mut out = Vec::new();
    search_rectangulations(n, 0, total_cells, &mut covered, &mut chosen, &mut out);
    out
}

fn first_uncovered(n: u32, covered: &[Vec<bool>]) -> Option<(u32, u32)> {
    for r in 1..=n {
        for c in 1..=(n + 1 - r) {
            if !covered[r as usize][c as usize] {
                return Some((r, c));
            }
        }
    }
    None
}

fn search_rectangulations(
    n: u32,
    used: u32,
    uncovered: usize,
    covered: &mut Vec<Vec<bool>>,
    chosen: &mut Vec<Rect>,
    out: &mut Vec<Vec<Rect>>,
) {
    if uncovered == 0 {
        if used == n {
            let mut rects = chosen.clone();
            rects.sort_unstable_by_key(|r| (r.r1, r.c1));
            out.push(rects);
        }
        return;
    }
    if used >= n {
        return;
    }
    let (r1, c1) = first_uncovered(n, covered).unwrap();
    // Any rectangle covering the first uncovered cell has its top-left there.
    let max_r2 = n + 1 - c1;
    for r2 in r1..=max_r2 {
        let max_c2 = n + 1 - r2;
        'width: for c2 in c1..=max_c2 {
            for r in r1..=r2 {
                for c in c1..=c2 {
                    if covered[r as usize][c as usize] {
                        continue 'width;
                    }
                }
            }
            let area = ((r2 - r1 + 1) * (c2 - c1 + 1)) as usize;
            for r in r1..=r2 {
                for c in c1..=c2 {
                    covered[r as usize][c as usize] = true;
                }
            }
            chosen.push(Rect::new(r1, c1, r2, c2));
            search_rectangulations(n, used + 1, uncovered - area, covered, chosen, out);
            chosen.pop();
            for r in r1..=r2 {
                for c in c1..=c2 {
                    covered[r as usize][c as usize] = false;
                }
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Suite plumbing
// ---------------------------------------------------------------------------

/// Bounds for [`run_suite`].
#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    /// Exhaustive bound for bijection and counting checks.
    pub max_n: usize,
    /// Bound for brute-force oracle set comparisons.
    pub oracle_n: usize,
    /// Worker threads; the report is identical for any value.
    pub jobs: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { max_n: 12, oracle_n: 8, jobs: 1 }
    }
}

#[derive(Debug, Clone)]
pub struct CheckResult {
    pub name: String,
    pub n: Option<usize>,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.results.iter().all(|r| r.pass)
    }

    pub fn failures(&self) -> usize {
        self.results.iter().filter(|r| !r.pass).count()
    }

    /// Aligned text table, one row per check.
    pub fn table(&self) -> String {
        let rows: Vec<[String; 4]> = self
            .results
            .iter()
            .map(|r| {
                [
                    r.name.clone(),
                    r.n.map_or_else(|| "-".to_string(), |n| n.to_string()),
                    if r.pass { "PASS".to_string() } else { "FAIL".to_string() },
                    r.detail.clone(),
                ]
            })
            .collect();
        let header = ["CHECK", "N", "RESULT", "DETAIL"].map(str::to_string);
        let mut widths = [0usize; 4];
        for row in std::iter::once(&header).chain(rows.iter()) {
            for (w, cell) in widths.iter_mut().zip(row.iter()) {
                *w = (*w).max(cell.len());
            }
        }
        let mut out = String::new();
        for row in std::iter::once(&header).chain(rows.iter()) {
            let line = format!(
                "{:<w0$}  {:>w1$}  {:<w2$}  {}",
                row[0],
                row[1],
                row[2],
                row[3],
                w0 = widths[0],
                w1 = widths[1],
                w2 = widths[2],
            );
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Machine-readable lines: `CHECK <name> n=<n> PASS|FAIL <detail>`.
    pub fn machine_lines(&self) -> String {
        let mut out = String::new();
        for r in &self.results {
            let n = r.n.map_or_else(|| "-".to_string(), |n| n.to_string());
            let verdict = if r.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("CHECK {} n={} {} {}\n", r.name, n, verdict, r.detail));
        }
        out
    }
}

fn result(name: &str, n: Option<usize>, pass: bool, detail: String) -> CheckResult {
    CheckResult { name: name.to_string(), n, pass, detail }
}

type Job = Box<dyn FnOnce() -> Vec<CheckResult> + Send>;

fn run_jobs(jobs: Vec<Job>, workers: usize) -> Vec<CheckResult> {
    if workers <= 1 {
        return jobs.into_iter().flat_map(|job| job()).collect();
    }
    let slots: Vec<Mutex<Option<Job>>> = jobs.into_iter().map(|j| Mutex::new(Some(j))).collect();
    let next = AtomicUsize::new(0);
    let results: Vec<Mutex<Vec<CheckResult>>> =
        slots.iter().map(|_| Mutex::new(Vec::new())).collect();
    std::thread::scope(|scope| {
        for _ in 0..workers.min(slots.len()) {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= slots.len() {
                    break;
                }
                let job = slots[i].lock().unwrap().take().unwrap();
                *results[i].lock().unwrap() = job();
            });
        }
    });
    results
        .into_iter()
        .flat_map(|m| m.into_inner().unwrap())
        .collect()
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

fn check_catalan_values() -> Vec<CheckResult> {
    let pinned: [u64; 11] = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
    let mut ok = true;
    let mut detail = String::new();
    for (n, &want) in pinned.iter().enumerate() {
        if catalan(n).unwrap() != want {
            ok = false;
            detail = format!("catalan({n}) != {want}");
        }
    }
    if catalan(12).unwrap() != 208012 {
        ok = false;
        detail = "catalan(12) != 208012".to_string();
    }
    for n in 0..=MAX_CATALAN_N {
        if catalan(n).unwrap() != catalan_closed_form(n).unwrap() {
            ok = false;
            detail = format!("recursion and closed form disagree at n={n}");
        }
    }
    if !matches!(catalan(MAX_CATALAN_N + 1), Err(Error::Overflow(_))) {
        ok = false;
        detail = "catalan(36) should refuse".to_string();
    }
    if ok {
        detail = format!("recursion = closed form for n <= {MAX_CATALAN_N}; refuses beyond");
    }
    vec![result("catalan-values", None, ok, detail)]
}

fn check_eq3(max_n: usize) -> Vec<CheckResult> {
    let mut ok = true;
    for n in 1..=max_n {
        let lhs: u64 = (1..n).map(|k| cat(k) * cat(n - k)).sum();
        if lhs != cat(n + 1) - 2 * cat(n) {
            ok = false;
        }
    }
    vec![result(
        "segner-eq3",
        None,
        ok,
        format!("sum c_k c_(n-k) = c_(n+1) - 2 c_n for n = 1..={max_n}"),
    )]
}

fn check_counts(n: usize) -> Vec<CheckResult> {
    let expected = cat(n);
    let mut term_count = 0u64;
    let mut trees = HashSet::new();
    let mut tilings = HashSet::new();
    let mut arcs = HashSet::new();
    let mut all_valid = true;
    for_each_term(n, &mut |term| {
        term_count += 1;
        if !term.validate().is_empty() {
            all_valid = false;
        }
        let t: RightSweptTree = eval(&term).expect("enumerated terms evaluate");
        let s: StaircaseTiling = eval(&term).expect("enumerated terms evaluate");
        let a: ArcTree = eval(&term).expect("enumerated terms evaluate");
        if !t.validate().is_empty() || !s.validate().is_empty() || !a.validate().is_empty() {
            all_valid = false;
        }
        trees.insert(t);
        tilings.insert(s);
        arcs.insert(a);
    });
    let entry = |name: &str, count: u64| {
        result(
            name,
            Some(n),
            count == expected && all_valid,
            format!("{count} distinct valid, expected {expected}"),
        )
    };
    vec![
        entry("counts-terms", term_count),
        entry("counts-T", trees.len() as u64),
        entry("counts-S", tilings.len() as u64),
        entry("counts-A", arcs.len() as u64),
    ]
}

fn check_class_counts(size: usize) -> Vec<CheckResult> {
    let mut tally = [0u64; 4];
    for_each_term(size, &mut |t| match t.root_op() {
        Some(OpKind::Mid) => tally[0] += 1,
        Some(OpKind::Right) => tally[1] += 1,
        Some(OpKind::Left) => tally[2] += 1,
        Some(OpKind::Fork) => tally[3] += 1,
        None => {}
    });
    let n = size - 1;
    let want_m = cat(n);
    let want_r = if n >= 1 { cat(n) } else { 0 };
    let want_l = if n >= 2 { cat(n) - cat(n - 1) } else { 0 };
    let want_f: u64 = if n >= 3 {
        (2..n).map(|k| cat(n - k) * (cat(k) - cat(k - 1))).sum()
    } else {
        0
    };
    let pass = tally == [want_m, want_r, want_l, want_f]
        && tally.iter().sum::<u64>() == cat(size);
    vec![result(
        "class-counts",
        Some(size),
        pass,
        format!(
            "m={} r={} l={} f={} (expected {want_m}/{want_r}/{want_l}/{want_f}, total {})",
            tally[0],
            tally[1],
            tally[2],
            tally[3],
            cat(size)
        ),
    )]
}

fn shape_vectors(n: usize) -> (Vec<RightSweptTree>, Vec<StaircaseTiling>, Vec<ArcTree>) {
    let mut trees = Vec::new();
    let mut tilings = Vec::new();
    let mut arcs = Vec::new();
    for_each_term(n, &mut |term| {
        trees.push(eval(&term).expect("valid term"));
        tilings.push(eval(&term).expect("valid term"));
        arcs.push(eval(&term).expect("valid term"));
    });
    (trees, tilings, arcs)
}

fn alpha_pair_ok<X: Constructible, Y: Constructible>(
    xs: &[X],
    ys: &HashSet<Y>,
    n: usize,
) -> Result<(), String> {
    let mut images = HashSet::with_capacity(xs.len());
    for x in xs {
        let y: Y = alpha(x).map_err(|e| e.to_string())?;
        if y.size() != n {
            return Err(format!("size changed: {} -> {}", n, y.size()));
        }
        if !y.validate().is_empty() {
            return Err("image fails validation".to_string());
        }
        let back: X = alpha(&y).map_err(|e| e.to_string())?;
        if back != *x {
            return Err("inverse does not recover the original".to_string());
        }
        images.insert(y);
    }
    if images.len() != xs.len() {
        return Err(format!("not injective: {} images of {}", images.len(), xs.len()));
    }
    if &images != ys {
        return Err("image set differs from the target family".to_string());
    }
    Ok(())
}

fn check_alpha(n: usize) -> Vec<CheckResult> {
    let (trees, tilings, arcs) = shape_vectors(n);
    let tree_set: HashSet<_> = trees.iter().cloned().collect();
    let tiling_set: HashSet<_> = tilings.iter().cloned().collect();
    let arc_set: HashSet<_> = arcs.iter().cloned().collect();

    let mut bijective = Ok(());
    bijective = bijective.and(alpha_pair_ok(&trees, &tiling_set, n));
    bijective = bijective.and(alpha_pair_ok(&trees, &arc_set, n));
    bijective = bijective.and(alpha_pair_ok(&tilings, &tree_set, n));
    bijective = bijective.and(alpha_pair_ok(&tilings, &arc_set, n));
    bijective = bijective.and(alpha_pair_ok(&arcs, &tree_set, n));
    bijective = bijective.and(alpha_pair_ok(&arcs, &tiling_set, n));
    // Identity direction.
    bijective = bijective.and(alpha_pair_ok(&trees, &tree_set, n));
    bijective = bijective.and(alpha_pair_ok(&tilings, &tiling_set, n));
    bijective = bijective.and(alpha_pair_ok(&arcs, &arc_set, n));

    // Functoriality across every triple reduces to: the term extracted from
    // any image equals the term of the source.
    let mut functorial = true;
    for t in &trees {
        let term = term_of(t).unwrap();
        let s: StaircaseTiling = eval(&term).unwrap();
        let a: ArcTree = eval(&term).unwrap();
        if term_of(&s).unwrap() != term || term_of(&a).unwrap() != term {
            functorial = false;
        }
    }

    let commute = commute_ok::<RightSweptTree, StaircaseTiling>(&trees)
        && commute_ok::<RightSweptTree, ArcTree>(&trees)
        && commute_ok::<StaircaseTiling, RightSweptTree>(&tilings)
        && commute_ok::<StaircaseTiling, ArcTree>(&tilings)
        && commute_ok::<ArcTree, RightSweptTree>(&arcs)
        && commute_ok::<ArcTree, StaircaseTiling>(&arcs);

    vec![
        result(
            "alpha-bijection",
            Some(n),
            bijective.is_ok(),
            bijective
                .err()
                .unwrap_or_else(|| "9 ordered pairs bijective with inverses".to_string()),
        ),
        result(
            "alpha-functorial",
            Some(n),
            functorial,
            "term equality across images covers all 27 triples".to_string(),
        ),
        result(
            "alpha-step-commute",
            Some(n),
            commute,
            "alpha(step(op, ins)) = step(op, alpha(ins)) on 6 pairs".to_string(),
        ),
    ]
}

fn commute_ok<X: Constructible, Y: Constructible>(xs: &[X]) -> bool {
    xs.iter().all(|x| {
        if x.size() == 0 {
            return true;
        }
        let lhs: Y = alpha(x).unwrap();
        let mapped = match decompose(x).unwrap() {
            Decomposed::Mid(c) => Decomposed::Mid(alpha::<X, Y>(&c).unwrap()),
            Decomposed::Right(c) => Decomposed::Right(alpha::<X, Y>(&c).unwrap()),
            Decomposed::Left(c) => Decomposed::Left(alpha::<X, Y>(&c).unwrap()),
            Decomposed::Fork { free, bound } => Decomposed::Fork {
                free: alpha::<X, Y>(&free).unwrap(),
                bound: alpha::<X, Y>(&bound).unwrap(),
            },
        };
        crate::terms::step(mapped).unwrap() == lhs
    })
}

fn check_alpha_random(n: usize, samples: usize) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_a1fa);
    let mut ok = true;
    for _ in 0..samples {
        let term = random_term(n, &mut rng);
        let t: RightSweptTree = eval(&term).unwrap();
        let s: StaircaseTiling = eval(&term).unwrap();
        let a: ArcTree = eval(&term).unwrap();
        let round: StaircaseTiling = alpha(&t).unwrap();
        if round != s || alpha::<StaircaseTiling, RightSweptTree>(&s).unwrap() != t {
            ok = false;
        }
        let round: ArcTree = alpha(&s).unwrap();
        if round != a || alpha::<ArcTree, StaircaseTiling>(&a).unwrap() != s {
            ok = false;
        }
        if term_of(&t).unwrap() != term
            || term_of(&s).unwrap() != term
            || term_of(&a).unwrap() != term
        {
            ok = false;
        }
    }
    vec![result(
        "alpha-random",
        Some(n),
        ok,
        format!("{samples} seeded random terms, all pairs round-trip"),
    )]
}

fn check_oracle(family: Family, n: usize) -> Vec<CheckResult> {
    let oracle: HashSet<Shape> = brute_force_family(family, n).into_iter().collect();
    let mut constructed = HashSet::new();
    for_each_term(n, &mut |term| {
        let shape = match family {
            Family::Tree => Shape::Tree(eval(&term).unwrap()),
            Family::Tiling => Shape::Tiling(eval(&term).unwrap()),
            Family::Arcs => Shape::Arcs(eval(&term).unwrap()),
            _ => unreachable!("oracle families are T, S, A"),
        };
        constructed.insert(shape);
    });
    let pass = constructed == oracle;
    let name = format!("oracle-{}", family.letter());
    vec![result(
        &name,
        Some(n),
        pass,
        format!("constructed {} vs brute-forced {}", constructed.len(), oracle.len()),
    )]
}

fn check_beta_n(n: usize) -> Vec<CheckResult> {
    let mut images = HashSet::new();
    let mut ok = true;
    for_each_term(n, &mut |term| {
        let t: RightSweptTree = eval(&term).unwrap();
        let s = beta(&t).unwrap();
        if !s.validate().is_empty() || beta_inv(&s).unwrap() != t {
            ok = false;
        }
        images.insert(s);

        let s0: StaircaseTiling = eval(&term).unwrap();
        let t0 = beta_inv(&s0).unwrap();
        if !t0.validate().is_empty() || beta(&t0).unwrap() != s0 {
            ok = false;
        }
    });
    let pass = ok && images.len() as u64 == cat(n);
    vec![result(
        "beta-roundtrip",
        Some(n),
        pass,
        format!("{} distinct images; inverse on both sides", images.len()),
    )]
}

fn check_beta_rules_n(n: usize) -> Vec<CheckResult> {
    let mut ok = true;
    let mut first = String::new();
    for_each_term(n, &mut |term| {
        let t: RightSweptTree = eval(&term).unwrap();
        let s = beta(&t).unwrap();
        let report = check_beta_rules(&t, &s);
        if !report.is_empty() && ok {
            ok = false;
            first = format!("{t}: {}", report.join("; "));
        }
    });
    vec![result(
        "beta-rules",
        Some(n),
        ok,
        if ok { "all five relative rules hold".to_string() } else { first },
    )]
}

fn check_alpha_beta_agree(n: usize) -> Vec<CheckResult> {
    let mut ok = true;
    for_each_term(n, &mut |term| {
        let t: RightSweptTree = eval(&term).unwrap();
        let via_alpha: StaircaseTiling = alpha(&t).unwrap();
        if beta(&t).unwrap() != via_alpha {
            ok = false;
        }
    });
    vec![result(
        "alpha-beta-agree",
        Some(n),
        ok,
        "beta equals the recursive bijection".to_string(),
    )]
}

fn check_alpha_beta_swap3() -> Vec<CheckResult> {
    let mut agree = 0usize;
    let mut differ: Vec<(StaircaseTiling, StaircaseTiling)> = Vec::new();
    for term in enum_terms(3) {
        let t: RightSweptTree = eval(&term).unwrap();
        let a: StaircaseTiling = alpha(&t).unwrap();
        let b = beta(&t).unwrap();
        if a == b {
            agree += 1;
        } else {
            differ.push((a, b));
        }
    }
    let transposed = differ.len() == 2
        && differ[0].0 == differ[1].1
        && differ[0].1 == differ[1].0;
    vec![result(
        "alpha-beta-swap-3",
        Some(3),
        agree == 3 && transposed,
        format!("{agree} of 5 agree, remaining 2 transposed: {transposed}"),
    )]
}

/// The size-12 worked example: parse, evaluate, re-extract, byte-compare.
pub const WORKED_EXAMPLE_TERM: &str = "f(m(l(r(m(m(E))))),r(f(m(E),r(r(m(E))))))";

fn check_worked_example() -> Vec<CheckResult> {
    let run = || -> Result<(), String> {
        let term = parse_term(WORKED_EXAMPLE_TERM).map_err(|e| e.to_string())?;
        let s: StaircaseTiling = eval(&term).map_err(|e| e.to_string())?;
        if s.size() != 12 || !s.validate().is_empty() {
            return Err("tiling image is not a valid size-12 shape".into());
        }
        let back = term_of(&s).map_err(|e| e.to_string())?;
        if back.to_string() != WORKED_EXAMPLE_TERM {
            return Err(format!("re-extracted term {back} differs"));
        }
        let t: RightSweptTree = alpha(&s).map_err(|e| e.to_string())?;
        let a: ArcTree = alpha(&s).map_err(|e| e.to_string())?;
        if t.size() != 12 || a.size() != 12 {
            return Err("images are not size 12".into());
        }
        if term_of(&t).map_err(|e| e.to_string())? != term
            || term_of(&a).map_err(|e| e.to_string())? != term
        {
            return Err("images decompose to a different term".into());
        }
        Ok(())
    };
    let outcome = run();
    vec![result(
        "worked-example",
        Some(12),
        outcome.is_ok(),
        outcome.err().unwrap_or_else(|| format!("{WORKED_EXAMPLE_TERM} round-trips")),
    )]
}

fn check_classical_binary(n: usize, oracle_n: usize) -> Vec<CheckResult> {
    let mut images = HashSet::new();
    let mut ok = true;
    for_each_term(n, &mut |term| {
        let s: StaircaseTiling = eval(&term).unwrap();
        let b = tiling_to_binary(&s).unwrap();
        if b.size() != n || binary_to_tiling(&b) != s {
            ok = false;
        }
        images.insert(b);
    });
    let mut detail = format!("{} distinct images, round-trip exact", images.len());
    if n <= oracle_n {
        let oracle: HashSet<BinaryTree> = brute_force_binaries(n).into_iter().collect();
        if images != oracle {
            ok = false;
        }
        detail.push_str(", equals brute-forced set");
    }
    let pass = ok && images.len() as u64 == cat(n);
    vec![result("classical-binary", Some(n), pass, detail)]
}

fn check_classical_planar(n: usize, oracle_n: usize) -> Vec<CheckResult> {
    let mut images = HashSet::new();
    let mut ok = true;
    for_each_term(n, &mut |term| {
        let a: ArcTree = eval(&term).unwrap();
        let p = arcs_to_planar(&a).unwrap();
        if p.size() != n || planar_to_arcs(&p) != a {
            ok = false;
        }
        images.insert(p);
    });
    let mut detail = format!("{} distinct images, round-trip exact", images.len());
    if n <= oracle_n {
        let oracle: HashSet<PlanarTree> = brute_force_planars(n).into_iter().collect();
        if images != oracle {
            ok = false;
        }
        detail.push_str(", equals brute-forced set");
    }
    let pass = ok && images.len() as u64 == cat(n);
    vec![result("classical-planar", Some(n), pass, detail)]
}

fn check_induced(n: usize) -> Vec<CheckResult> {
    let mut images = HashSet::new();
    let mut ok = true;
    for_each_term(n, &mut |term| {
        let s: StaircaseTiling = eval(&term).unwrap();
        let b = tiling_to_binary(&s).unwrap();
        let p = induced(&Shape::Binary(b.clone()), Family::Planar).unwrap();
        if p.size() != n || induced(&p, Family::Binary).unwrap() != Shape::Binary(b) {
            ok = false;
        }
        images.insert(p);
    });
    let pass = ok && images.len() as u64 == cat(n);
    vec![result(
        "induced-binary-planar",
        Some(n),
        pass,
        format!("{} distinct planar images with exact inverses", images.len()),
    )]
}

fn check_codec_shapes(n: usize) -> Vec<CheckResult> {
    let mut ok = true;
    for_each_term(n, &mut |term| {
        if parse_term(&term.to_string()).as_ref() != Ok(&term) {
            ok = false;
        }
        let t: RightSweptTree = eval(&term).unwrap();
        let s: StaircaseTiling = eval(&term).unwrap();
        let a: ArcTree = eval(&term).unwrap();
        let b = tiling_to_binary(&s).unwrap();
        let p = arcs_to_planar(&a).unwrap();
        if parse_tree(&t.to_string()).as_ref() != Ok(&t)
            || parse_tiling(&s.to_string()).as_ref() != Ok(&s)
            || parse_arcs(&a.to_string()).as_ref() != Ok(&a)
            || parse_binary(&b.to_string()).as_ref() != Ok(&b)
            || parse_planar(&p.to_string()).as_ref() != Ok(&p)
        {
            ok = false;
        }
    });
    vec![result(
        "codec-shapes",
        Some(n),
        ok,
        "parse(format(x)) = x across terms and all five families".to_string(),
    )]
}

fn check_codec_fuzz(count: usize) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(0xf0_22a7);
    let mut ok = true;
    for i in 0..count {
        let size = i % 17;
        let term = random_term(size, &mut rng);
        if parse_term(&term.to_string()).as_ref() != Ok(&term) {
            ok = false;
        }
    }
    vec![result(
        "codec-fuzz",
        None,
        ok,
        format!("{count} seeded random terms round-trip"),
    )]
}

fn check_rectangulation(n: usize) -> Vec<CheckResult> {
    let general: BTreeSet<Vec<Rect>> =
        brute_force_rectangulations(n as u32).into_iter().collect();
    let diagonal: BTreeSet<Vec<Rect>> = brute_force_tilings(n as u32)
        .into_iter()
        .map(|t| {
            let mut rects = t.rects().to_vec();
            rects.sort_unstable_by_key(|r| (r.r1, r.c1));
            rects
        })
        .collect();
    let pass = general == diagonal;
    vec![result(
        "rectangulation-equivalence",
        Some(n),
        pass,
        format!(
            "{} n-rectangle partitions vs {} diagonal tilings",
            general.len(),
            diagonal.len()
        ),
    )]
}

// ---------------------------------------------------------------------------
// The suite
// ---------------------------------------------------------------------------

/// Runs every check at the configured bounds. The report is deterministic
/// and independent of the worker count.
pub fn run_suite(config: &SuiteConfig) -> Report {
    let max_n = config.max_n;
    let oracle_n = config.oracle_n.min(max_n);
    let alpha_n = max_n.min(10);
    let rules_n = max_n.min(8);
    let induced_n = max_n.min(10);
    let codec_n = max_n.min(10);
    let rect_n = max_n.min(6);

    let mut jobs: Vec<Job> = Vec::new();
    jobs.push(Box::new(check_catalan_values));
    jobs.push(Box::new(move || check_eq3(max_n)));
    for n in 0..=max_n {
        jobs.push(Box::new(move || check_counts(n)));
    }
    for size in 1..=(max_n + 1).min(13) {
        jobs.push(Box::new(move || check_class_counts(size)));
    }
    for n in 0..=alpha_n {
        jobs.push(Box::new(move || check_alpha(n)));
    }
    if max_n >= 12 {
        jobs.push(Box::new(move || check_alpha_random(12, 1000)));
    }
    for family in [Family::Tree, Family::Tiling, Family::Arcs] {
        for n in 0..=oracle_n {
            jobs.push(Box::new(move || check_oracle(family, n)));
        }
    }
    for n in 0..=max_n {
        jobs.push(Box::new(move || check_beta_n(n)));
    }
    for n in 0..=rules_n {
        jobs.push(Box::new(move || check_beta_rules_n(n)));
    }
    for n in 0..=max_n.min(2) {
        jobs.push(Box::new(move || check_alpha_beta_agree(n)));
    }
    if max_n >= 3 {
        jobs.push(Box::new(check_alpha_beta_swap3));
    }
    jobs.push(Box::new(check_worked_example));
    for n in 0..=max_n {
        jobs.push(Box::new(move || check_classical_binary(n, oracle_n)));
    }
    for n in 0..=max_n {
        jobs.push(Box::new(move || check_classical_planar(n, oracle_n)));
    }
    for n in 0..=induced_n {
        jobs.push(Box::new(move || check_induced(n)));
    }
    for n in 0..=codec_n {
        jobs.push(Box::new(move || check_codec_shapes(n)));
    }
    jobs.push(Box::new(move || check_codec_fuzz(10_000)));
    for n in 0..=rect_n {
        jobs.push(Box::new(move || check_rectangulation(n)));
    }

    Report { results: run_jobs(jobs, config.jobs.max(1)) }
}
