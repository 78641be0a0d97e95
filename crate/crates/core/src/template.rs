//! Knot holders of homogeneous braid closures and their symbolic dynamics
//! at `q = 1`.
//!
//! Branch lines correspond to crossings. From each crossing one half-twisted
//! strip runs along its column to the next crossing in the flow direction
//! (up for positive columns, down for negative ones), and untwisted strips
//! split off to every crossing of a neighbouring column met on the way.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::braid::BraidWord;
use crate::error::{BraidError, TemplateError};
use crate::matrix::det_laurent;
use crate::ring::{QLaurent, XSeries};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Strip {
    pub id: usize,
    pub source: usize,
    pub target: usize,
    pub half_twist: bool,
    /// Number of fiber arcs crossed, `0` or `1`.
    pub degree_mark: u32,
}

/// Strips glued along branch lines, plus the degree of the elliptic axis
/// loop.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Template {
    pub strips: Vec<Strip>,
    pub branch_lines: usize,
    pub axis_degree: u32,
}

/// A primitive periodic orbit, as the Lyndon rotation of its strip cycle.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Orbit {
    pub cycle: Vec<usize>,
    pub degree: u32,
    /// `+1` for an even number of half twists, `-1` for odd.
    pub hyperbolic_sign: i8,
}

impl Orbit {
    /// `degree sign cycle`, e.g. `3 - 0 1 2`.
    pub fn render(&self) -> String {
        let sign = if self.hyperbolic_sign > 0 { "+" } else { "-" };
        let cyc: Vec<String> = self.cycle.iter().map(usize::to_string).collect();
        format!("{} {} {}", self.degree, sign, cyc.join(" "))
    }
}

/// Builds the knot holder of a homogeneous braid closure.
pub fn build_template(word: &BraidWord) -> Result<Template, BraidError> {
    let stats = word.analyze();
    if !stats.is_homogeneous {
        return Err(BraidError::NotHomogeneous("knot holders need every column with a single sign".into()));
    }
    let letters = word.letters();
    let c = letters.len();
    let col = |k: usize| letters[k].unsigned_abs() as usize;
    let mut by_col: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for k in 0..c {
        by_col.entry(col(k)).or_default().push(k);
    }
    let mut strips = Vec::new();
    let mut push = |source, target, half_twist, degree_mark| {
        let id = strips.len();
        strips.push(Strip { id, source, target, half_twist, degree_mark });
    };
    for k in 0..c {
        let i = col(k);
        let same = &by_col[&i];
        let idx = same.iter().position(|&h| h == k).unwrap();
        let up = letters[k] > 0;
        let next = if up { same[(idx + 1) % same.len()] } else { same[(idx + same.len() - 1) % same.len()] };
        push(k, next, true, 1);
        // Heights passed on the way, excluding both ends; all of them if the
        // column has a single crossing.
        let steps = if next == k { c - 1 } else if up { (next + c - k) % c - 1 } else { (k + c - next) % c - 1 };
        for d in 1..=steps {
            let h = if up { (k + d) % c } else { (k + c - d) % c };
            let j = col(h);
            if j + 1 == i || j == i + 1 {
                push(k, h, false, u32::from(j < i));
            }
        }
    }
    Ok(Template { strips, branch_lines: c, axis_degree: word.strands() as u32 })
}

impl Template {
    /// Strips that may follow strip `s`.
    pub fn successors(&self, s: usize) -> Vec<usize> {
        let t = self.strips[s].target;
        self.strips.iter().filter(|x| x.source == t).map(|x| x.id).collect()
    }

    /// `axis <n>` followed by `strip <id> [twist] [mark] : <successors>`.
    pub fn dump(&self) -> String {
        let mut out = format!("axis {}\n", self.axis_degree);
        for s in &self.strips {
            let mut head = format!("strip {}", s.id);
            if s.half_twist {
                head.push_str(" twist");
            }
            if s.degree_mark == 1 {
                head.push_str(" mark");
            }
            let succ: Vec<String> = self.successors(s.id).iter().map(usize::to_string).collect();
            writeln!(out, "{head} : {}", succ.join(" ")).unwrap();
        }
        out
    }

    /// Parses the [`Template::dump`] format. Branch lines are recovered from
    /// the successor sets, which must be pairwise equal or disjoint.
    pub fn parse_dump(text: &str) -> Result<Self, TemplateError> {
        let err = |line: usize, msg: &str| TemplateError::Parse { line, msg: msg.to_string() };
        let mut axis = None;
        let mut rows: Vec<(usize, bool, u32, Vec<usize>)> = Vec::new();
        for (ln, raw) in text.lines().enumerate() {
            let ln = ln + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            if let Some(rest) = line.strip_prefix("axis") {
                axis = Some(rest.trim().parse::<u32>().map_err(|_| err(ln, "bad axis degree"))?);
                continue;
            }
            let (head, tail) = line.split_once(':').ok_or_else(|| err(ln, "missing ':'"))?;
            let mut words = head.split_whitespace();
            if words.next() != Some("strip") {
                return Err(err(ln, "expected 'strip'"));
            }
            let id: usize = words.next().and_then(|w| w.parse().ok()).ok_or_else(|| err(ln, "bad strip id"))?;
            let (mut twist, mut mark) = (false, 0);
            for w in words {
                match w {
                    "twist" => twist = true,
                    "mark" => mark = 1,
                    _ => return Err(err(ln, &format!("unknown flag {w:?}"))),
                }
            }
            let succ = tail
                .split_whitespace()
                .map(|w| w.parse::<usize>().map_err(|_| err(ln, "bad successor id")))
                .collect::<Result<Vec<_>, _>>()?;
            rows.push((id, twist, mark, succ));
        }
        rows.sort_by_key(|r| r.0);
        for (k, r) in rows.iter().enumerate() {
            if r.0 != k {
                return Err(err(0, "strip ids must be 0..N without gaps"));
            }
        }
        for r in &rows {
            if let Some(&bad) = r.3.iter().find(|&&s| s >= rows.len()) {
                return Err(TemplateError::UnknownStrip(bad));
            }
        }
        // Each distinct successor set is one branch line.
        let mut lines: Vec<BTreeSet<usize>> = Vec::new();
        let mut source = vec![None; rows.len()];
        let mut target = vec![0; rows.len()];
        for r in &rows {
            let set: BTreeSet<usize> = r.3.iter().copied().collect();
            let idx = match lines.iter().position(|l| *l == set) {
                Some(i) => i,
                None => {
                    lines.push(set.clone());
                    lines.len() - 1
                }
            };
            target[r.0] = idx;
            for &s in &set {
                match source[s] {
                    Some(prev) if prev != idx => {
                        return Err(err(0, &format!("strip {s} follows two different branch lines")))
                    }
                    _ => source[s] = Some(idx),
                }
            }
        }
        let mut extra = lines.len();
        let strips = rows
            .iter()
            .map(|r| Strip {
                id: r.0,
                source: source[r.0].unwrap_or_else(|| {
                    extra += 1;
                    extra - 1
                }),
                target: target[r.0],
                half_twist: r.1,
                degree_mark: r.2,
            })
            .collect();
        Ok(Template { strips, branch_lines: extra, axis_degree: axis.ok_or_else(|| err(0, "missing axis line"))? })
    }

    /// `det(I - A)` with `A[t][s] = (-1)^{twist} x^{mark}` summed over strips
    /// `s -> t` between branch lines, as a polynomial in `x`.
    pub fn transition_determinant(&self) -> QLaurent {
        let d = self.branch_lines;
        let mut a = vec![vec![QLaurent::zero(); d]; d];
        for i in 0..d {
            a[i][i] = QLaurent::one();
        }
        for s in &self.strips {
            let sign = if s.half_twist { -1 } else { 1 };
            a[s.target][s.source] -= &QLaurent::monomial(sign, 2 * s.degree_mark as i64);
        }
        det_laurent(a)
    }

    /// Longest possible strip cycle of degree at most `max_degree`, given
    /// that every cycle crosses a fiber arc.
    fn length_bound(&self, max_degree: u32) -> usize {
        (max_degree as usize + 1) * self.strips.len()
    }

    fn has_zero_degree_cycle(&self) -> bool {
        // Kahn's algorithm on the subgraph of unmarked strips.
        let unmarked: Vec<usize> = self.strips.iter().filter(|s| s.degree_mark == 0).map(|s| s.id).collect();
        let mut indeg: BTreeMap<usize, usize> = unmarked.iter().map(|&s| (s, 0)).collect();
        for &s in &unmarked {
            for t in self.successors(s) {
                if let Some(v) = indeg.get_mut(&t) {
                    *v += 1;
                }
            }
        }
        let mut queue: Vec<usize> = indeg.iter().filter(|(_, &v)| v == 0).map(|(&k, _)| k).collect();
        let mut removed = 0;
        while let Some(s) = queue.pop() {
            removed += 1;
            for t in self.successors(s) {
                if let Some(v) = indeg.get_mut(&t) {
                    *v -= 1;
                    if *v == 0 {
                        queue.push(t);
                    }
                }
            }
        }
        removed < unmarked.len()
    }
}

fn is_lyndon(w: &[usize]) -> bool {
    (1..w.len()).all(|r| {
        let rot = w[r..].iter().chain(&w[..r]);
        w.iter().lt(rot)
    })
}

/// Primitive orbits of degree at most `max_degree`, sorted by degree and
/// then by cycle.
pub fn enumerate_orbits(t: &Template, max_degree: u32) -> Result<Vec<Orbit>, TemplateError> {
    if max_degree == 0 {
        return Ok(Vec::new());
    }
    if t.has_zero_degree_cycle() {
        return Err(TemplateError::Parse { line: 0, msg: "template has a cycle of degree zero".into() });
    }
    let succ: Vec<Vec<usize>> = (0..t.strips.len()).map(|s| t.successors(s)).collect();
    let max_len = t.length_bound(max_degree);
    let per_start: Vec<Vec<Orbit>> = (0..t.strips.len())
        .into_par_iter()
        .map(|start| {
            let mut found = Vec::new();
            let mut path = vec![start];
            let deg0 = t.strips[start].degree_mark;
            dfs(t, &succ, start, deg0, max_degree, max_len, &mut path, &mut found);
            found
        })
        .collect();
    let mut all: Vec<Orbit> = per_start.into_iter().flatten().collect();
    all.sort_by(|a, b| (a.degree, &a.cycle).cmp(&(b.degree, &b.cycle)));
    Ok(all)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    t: &Template,
    succ: &[Vec<usize>],
    start: usize,
    deg: u32,
    max_degree: u32,
    max_len: usize,
    path: &mut Vec<usize>,
    found: &mut Vec<Orbit>,
) {
    let last = *path.last().unwrap();
    if succ[last].contains(&start) && is_lyndon(path) {
        let twists = path.iter().filter(|&&s| t.strips[s].half_twist).count();
        found.push(Orbit {
            cycle: path.clone(),
            degree: deg,
            hyperbolic_sign: if twists % 2 == 0 { 1 } else { -1 },
        });
    }
    if path.len() >= max_len {
        return;
    }
    for &nx in &succ[last] {
        // The minimal rotation starts at the smallest id.
        if nx < start {
            continue;
        }
        let d = deg + t.strips[nx].degree_mark;
        if d > max_degree {
            continue;
        }
        path.push(nx);
        dfs(t, succ, start, d, max_degree, max_len, path, found);
        path.pop();
    }
}

fn geometric(sign: i8, degree: u32, order: i64) -> XSeries {
    let mut out = XSeries::zero(order);
    let mut k = 0i64;
    while 2 * k * degree as i64 <= order {
        let c = if sign < 0 && k % 2 == 1 { -1 } else { 1 };
        out.add_term_owned(2 * k * degree as i64, QLaurent::from(c));
        k += 1;
    }
    out
}

/// `(1 - x^{axis}) Π_{γ primitive} 1/(1 - ±x^{deg γ})` up to `x^order`.
pub fn zeta_classical(t: &Template, order: u32) -> Result<XSeries, TemplateError> {
    let xmax = 2 * order as i64;
    let mut acc = XSeries::exact([(0, QLaurent::one()), (2 * t.axis_degree as i64, QLaurent::from(-1))])
        .truncate(xmax);
    for o in enumerate_orbits(t, order)? {
        acc = &acc * &geometric(o.hyperbolic_sign, o.degree, xmax);
    }
    Ok(acc)
}

/// The same zeta function as a signed sum over multi-loops: finite
/// collections of orbits with multiplicity, plus at most one axis loop.
/// A multi-loop contributes `(-1)^{#negative + #axis} x^{degree}`.
pub fn zeta_multiloop(t: &Template, order: u32) -> Result<XSeries, TemplateError> {
    let orbits = enumerate_orbits(t, order)?;
    let mut counts = vec![BigInt::zero(); order as usize + 1];
    fn rec(orbits: &[Orbit], from: usize, deg: u32, neg: u32, order: u32, counts: &mut [BigInt]) {
        let sign = if neg % 2 == 0 { 1 } else { -1 };
        counts[deg as usize] += sign;
        for (k, o) in orbits.iter().enumerate().skip(from) {
            if deg + o.degree > order {
                continue;
            }
            let neg = neg + u32::from(o.hyperbolic_sign < 0);
            // Staying at k allows repeats; the list is enumerated as a multiset.
            rec(orbits, k, deg + o.degree, neg, order, counts);
        }
    }
    rec(&orbits, 0, 0, 0, order, &mut counts);
    let mut out = XSeries::zero(2 * order as i64);
    for (d, c) in counts.iter().enumerate() {
        out.add_term_owned(2 * d as i64, QLaurent::from(c.clone()));
        let with_axis = d + t.axis_degree as usize;
        if with_axis <= order as usize {
            out.add_term_owned(2 * with_axis as i64, QLaurent::from(-c.clone()));
        }
    }
    Ok(out)
}

/// Number of primitive orbits by degree `1..=max_degree`, from traces of
/// powers of the degree-graded adjacency matrix and Möbius inversion.
pub fn necklace_counts(t: &Template, max_degree: u32) -> Vec<BigInt> {
    let s = t.strips.len();
    let dmax = max_degree as usize;
    let succ: Vec<Vec<usize>> = (0..s).map(|i| t.successors(i)).collect();
    let max_len = t.length_bound(max_degree);
    // walks[i][j][d]: walks from strip i ending at strip j with degree d,
    // counting the marks of every strip after the first.
    let mut walks: Vec<Vec<Vec<BigInt>>> = vec![vec![vec![BigInt::zero(); dmax + 1]; s]; s];
    for i in 0..s {
        walks[i][i][0] = BigInt::one();
    }
    // closed[k][d]: rooted closed walks of length k and degree d.
    let mut closed = vec![vec![BigInt::zero(); dmax + 1]; max_len + 1];
    for k in 1..=max_len {
        let mut next = vec![vec![vec![BigInt::zero(); dmax + 1]; s]; s];
        for i in 0..s {
            for j in 0..s {
                for d in 0..=dmax {
                    if walks[i][j][d].is_zero() {
                        continue;
                    }
                    for &nx in &succ[j] {
                        let nd = d + t.strips[nx].degree_mark as usize;
                        if nd <= dmax {
                            next[i][nx][nd] += &walks[i][j][d];
                        }
                    }
                }
            }
        }
        walks = next;
        for i in 0..s {
            // Closing at i: the cycle i -> ... -> i of length k has i's own
            // mark counted once at the end.
            for d in 0..=dmax {
                closed[k][d] += &walks[i][i][d];
            }
        }
    }
    let mobius = |mut r: usize| -> i64 {
        let mut mu = 1;
        let mut p = 2;
        while p * p <= r {
            if r % p == 0 {
                r /= p;
                if r % p == 0 {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if r > 1 {
            mu = -mu;
        }
        mu
    };
    let gcd = |mut a: usize, mut b: usize| {
        while b != 0 {
            (a, b) = (b, a % b);
        }
        a
    };
    let mut out = vec![BigInt::zero(); dmax + 1];
    for k in 1..=max_len {
        for d in 1..=dmax {
            // k * P(k, d) = Σ_{r | gcd(k,d)} μ(r) closed(k/r, d/r)
            let g = gcd(k, d);
            let mut acc = BigInt::zero();
            for r in (1..=g).filter(|r| g % r == 0) {
                acc += &closed[k / r][d / r] * mobius(r);
            }
            out[d] += acc / k;
        }
    }
    out.remove(0);
    out
}
