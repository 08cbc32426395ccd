//! Zero finding between Gram points.
//!
//! `Z` is sampled at every Gram point up to the target height. Consecutive good
//! Gram points (`(−1)^n Z(g_n) > 0`) delimit blocks which, by Rosser's rule, hold
//! as many zeros as Gram intervals. Blocks that show too few sign changes are
//! sampled more densely and then searched for hidden extrema; blocks that still
//! disagree are merged with their neighbour. Every bracket endpoint carries a
//! sign certified against the evaluator's error bound.

use rayon::prelude::*;

use super::siegel::{self, gram_point, theta};
use super::{count_check, ZeroList, ZeroSource, MAX_COMPUTE_HEIGHT};
use crate::error::{Error, Result};

const SIGN_TARGET: f64 = 1e-6;
const MAX_ROUNDS: usize = 40;
const DOUBLING_ROUNDS: usize = 6;
const MAX_MERGE: usize = 8;

#[derive(Clone, Copy, Debug)]
struct Sample {
    t: f64,
    z: f64,
    err: f64,
}

impl Sample {
    fn sign(&self) -> i32 {
        if self.z.abs() <= self.err {
            0
        } else if self.z > 0.0 {
            1
        } else {
            -1
        }
    }
}

fn sample_with(t: f64, target: f64) -> Sample {
    let (z, err) = siegel::z_with_bound(t, target);
    let s = Sample { t, z, err };
    if s.sign() != 0 {
        return s;
    }
    let (z, err) = siegel::z_euler_maclaurin(t, 1e-15);
    Sample { t, z, err }
}

fn sample(t: f64) -> Sample {
    sample_with(t, SIGN_TARGET)
}

/// Sample with a certified sign, nudging `t` if it sits on a zero.
fn certified_sample(t: f64, lo: f64, hi: f64) -> Sample {
    let mut s = sample(t);
    let mut k = 1.0;
    while s.sign() == 0 && k < 1e6 {
        let nt = t + k * 1e-9 * t.max(1.0);
        if nt >= hi || nt <= lo {
            break;
        }
        s = sample(nt);
        k *= 4.0;
    }
    s
}

fn sign_changes(pts: &[Sample]) -> Vec<(Sample, Sample)> {
    let mut out = Vec::new();
    let mut last: Option<Sample> = None;
    for p in pts {
        if p.sign() == 0 {
            continue;
        }
        if let Some(l) = last {
            if l.sign() != p.sign() {
                out.push((l, *p));
            }
        }
        last = Some(*p);
    }
    out
}

fn densify(pts: &[Sample]) -> Vec<Sample> {
    let mids: Vec<Sample> = pts
        .windows(2)
        .map(|w| certified_sample(0.5 * (w[0].t + w[1].t), w[0].t, w[1].t))
        .collect();
    let mut out = Vec::with_capacity(pts.len() * 2);
    for (i, p) in pts.iter().enumerate() {
        out.push(*p);
        if i < mids.len() {
            out.push(mids[i]);
        }
    }
    out
}

/// Golden-section search for the minimum of `s·Z` on `[a, b]`; returns every probe.
fn extremum_probes(a: f64, b: f64, s: i32) -> Vec<Sample> {
    let r = 0.5 * (5f64.sqrt() - 1.0);
    let (mut a, mut b) = (a, b);
    let mut c = b - r * (b - a);
    let mut d = a + r * (b - a);
    let mut fc = sample(c);
    let mut fd = sample(d);
    let mut probes = vec![fc, fd];
    for _ in 0..MAX_ROUNDS {
        if fc.sign() == -s || fd.sign() == -s {
            break;
        }
        if s as f64 * fc.z < s as f64 * fd.z {
            b = d;
            d = c;
            fd = fc;
            c = b - r * (b - a);
            fc = sample(c);
            probes.push(fc);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + r * (b - a);
            fd = sample(d);
            probes.push(fd);
        }
        if b - a < 1e-12 * b {
            break;
        }
    }
    probes
}

fn insert_sorted(pts: &mut Vec<Sample>, extra: Vec<Sample>) {
    pts.extend(extra.into_iter().filter(|p| p.sign() != 0));
    pts.sort_by(|a, b| a.t.total_cmp(&b.t));
    pts.dedup_by(|a, b| a.t == b.t);
}

/// Brackets for the zeros of one (possibly merged) block, or `None` if the
/// expected count could not be matched.
fn solve_block(points: &[Sample], expected: usize) -> Option<Vec<(Sample, Sample)>> {
    let mut pts = points.to_vec();
    for round in 0..MAX_ROUNDS {
        let br = sign_changes(&pts);
        if br.len() == expected {
            return Some(br);
        }
        if br.len() > expected {
            return None;
        }
        if round < DOUBLING_ROUNDS {
            pts = densify(&pts);
            continue;
        }
        // look for dips towards the axis inside runs of equal sign
        let mut extra = Vec::new();
        for i in 1..pts.len().saturating_sub(1) {
            let (l, m, r) = (pts[i - 1], pts[i], pts[i + 1]);
            let s = m.sign();
            if s != 0 && l.sign() == s && r.sign() == s {
                let v = s as f64;
                if v * m.z <= v * l.z && v * m.z <= v * r.z {
                    extra.extend(extremum_probes(l.t, r.t, s));
                }
            }
        }
        let before = pts.len();
        insert_sorted(&mut pts, extra);
        if pts.len() == before {
            return None;
        }
    }
    None
}

/// Illinois iteration on a certified bracket, stopping at width `acc` or at
/// the resolution of binary64.
fn refine(lo: Sample, hi: Sample, acc: f64) -> Result<f64> {
    let (mut a, mut fa, mut b, mut fb) = (lo.t, lo.z, hi.t, hi.z);
    let sa = lo.sign();
    let mut side = 0;
    let probe = |t: f64| sample_with(t, acc);
    while b - a > acc {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let w = b - a;
        let mut m = (a * fb - b * fa) / (fb - fa);
        if !(m > a + 1e-3 * w && m < b - 1e-3 * w) {
            m = mid;
        }
        let s = probe(m);
        match s.sign() {
            0 => {
                // the zero sits within the evaluator's resolution of m; shrink the
                // bracket with certified probes on either side
                let mut d = 0.25 * acc;
                let mut moved = false;
                while !moved && d < 0.5 * w {
                    let (lt, rt) = ((m - d).max(a), (m + d).min(b));
                    let (l, r) = (probe(lt), probe(rt));
                    if l.sign() == sa && lt > a {
                        a = lt;
                        fa = l.z;
                        moved = true;
                    }
                    if r.sign() == -sa && rt < b {
                        b = rt;
                        fb = r.z;
                        moved = true;
                    }
                    if l.sign() == -sa && lt > a {
                        b = lt;
                        fb = l.z;
                        moved = true;
                    } else if r.sign() == sa && rt < b {
                        a = rt;
                        fa = r.z;
                        moved = true;
                    }
                    d *= 2.0;
                }
                if !moved && (m - a).max(b - m) <= acc.max(ulp(m)) {
                    return Ok(m);
                }
                if !moved {
                    return Err(Error::ZeroSearch(format!(
                        "cannot separate a zero near t = {m} at accuracy {acc}"
                    )));
                }
                side = 0;
            }
            sg if sg == sa => {
                a = m;
                fa = s.z;
                if side == -1 {
                    fb *= 0.5;
                }
                side = -1;
            }
            _ => {
                b = m;
                fb = s.z;
                if side == 1 {
                    fa *= 0.5;
                }
                side = 1;
            }
        }
    }
    Ok(0.5 * (a + b))
}

fn is_good(n: i64, s: &Sample) -> bool {
    let expected = if n.rem_euclid(2) == 0 { 1 } else { -1 };
    s.sign() == expected
}

/// All zeros with `0 < γ ≤ t_max`, each within `accuracy` (or binary64
/// resolution at that height, whichever is larger).
pub fn compute_zeros(t_max: f64, accuracy: f64) -> Result<ZeroList> {
    if !(30.0..=MAX_COMPUTE_HEIGHT).contains(&t_max) {
        return Err(Error::ZeroSearch(format!(
            "built-in computation covers heights 30..=1e7, got {t_max}"
        )));
    }
    if !(1e-12..0.1).contains(&accuracy) {
        return Err(Error::ZeroSearch(format!("accuracy must lie in [1e-12, 0.1), got {accuracy}")));
    }
    let n_hi = (theta(t_max) / std::f64::consts::PI).ceil() as i64 + 1;
    let mut gram: Vec<Sample> = (-1..=n_hi).into_par_iter().map(|n| sample(gram_point(n))).collect();
    // index i holds g_{i−1}; make sure a good Gram point lies beyond t_max
    loop {
        let beyond = gram
            .iter()
            .enumerate()
            .any(|(i, s)| s.t > t_max && is_good(i as i64 - 1, s));
        if beyond {
            break;
        }
        let start = gram.len() as i64 - 1;
        let more: Vec<Sample> = (start..start + 64).into_par_iter().map(|n| sample(gram_point(n))).collect();
        gram.extend(more);
    }
    let good: Vec<usize> = gram
        .iter()
        .enumerate()
        .filter(|(i, s)| is_good(*i as i64 - 1, s))
        .map(|(i, _)| i)
        .collect();
    if good.first() != Some(&0) {
        return Err(Error::ZeroSearch("Z has an unexpected sign at g_{-1}".into()));
    }
    let last_needed = good.iter().position(|&i| gram[i].t > t_max).unwrap();
    let blocks: Vec<(usize, usize)> = good[..=last_needed].windows(2).map(|w| (w[0], w[1])).collect();

    let solved: Vec<Option<Vec<(Sample, Sample)>>> = blocks
        .par_iter()
        .map(|&(a, b)| solve_block(&gram[a..=b], b - a))
        .collect();

    let mut brackets = Vec::new();
    let mut i = 0;
    while i < blocks.len() {
        if let Some(br) = &solved[i] {
            brackets.extend_from_slice(br);
            i += 1;
            continue;
        }
        // Rosser-rule exception or a stubborn block: widen to neighbours
        let mut done = false;
        for span in 2..=MAX_MERGE {
            let j = i + span - 1;
            if j >= blocks.len() {
                break;
            }
            let (a, b) = (blocks[i].0, blocks[j].1);
            if let Some(br) = solve_block(&gram[a..=b], b - a) {
                brackets.extend(br);
                i = j + 1;
                done = true;
                break;
            }
        }
        if !done {
            return Err(Error::ZeroSearch(format!(
                "could not account for all zeros in the Gram block starting at t = {}",
                gram[blocks[i].0].t
            )));
        }
    }

    let roots: Result<Vec<f64>> = brackets
        .par_iter()
        .filter(|(l, _)| l.t <= t_max)
        .map(|&(l, h)| refine(l, h, accuracy))
        .collect();
    let mut gammas = roots?;
    gammas.retain(|&g| g <= t_max);
    let zl = ZeroList::new(gammas, t_max, accuracy.max(ulp(t_max)), ZeroSource::Computed)?;
    if !count_check(zl.gammas(), t_max) {
        return Err(Error::ZeroSearch(format!("completeness check failed at t = {t_max}")));
    }
    Ok(zl)
}

fn ulp(t: f64) -> f64 {
    f64::from_bits(t.abs().to_bits() + 1) - t.abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::tables::SMALL_ZEROS;

    #[test]
    fn low_heights_match_reference() {
        assert_eq!(compute_zeros(30.0, 1e-10).unwrap().count(), 3);
        let zl = compute_zeros(100.0, 1e-10).unwrap();
        assert_eq!(zl.count(), 29);
        for (a, b) in zl.gammas().iter().zip(SMALL_ZEROS.iter()) {
            assert!((a - b).abs() < 1e-10, "{a} vs {b}");
        }
        assert!((zl.gammas()[0] - 14.134725141734693790).abs() < 1e-10);
        assert!((zl.gammas()[28] - 98.831194218193692233).abs() < 1e-10);
    }

    #[test]
    fn matches_table_below_1000() {
        let zl = compute_zeros(999.9, 1e-10).unwrap();
        assert_eq!(zl.count(), SMALL_ZEROS.len());
        let worst = zl
            .gammas()
            .iter()
            .zip(SMALL_ZEROS.iter())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        assert!(worst < 1e-10, "{worst}");
    }

    #[test]
    fn rejects_bad_requests() {
        assert!(compute_zeros(20.0, 1e-10).is_err());
        assert!(compute_zeros(2e7, 1e-10).is_err());
        assert!(compute_zeros(100.0, 1e-13).is_err());
    }
}
