//! Depth-first lattice point search: free vertices take integer values in
//! their singleton boxes, the last one absorbs the remaining total, and each
//! subcurve constraint is tested as soon as its last free vertex is set.

use crate::balance::bounds::ScaledBounds;
use crate::dualgraph::VertexSet;
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub(crate) struct Constraint {
    pub set: VertexSet,
    pub bounds: ScaledBounds,
}

pub(crate) struct Search<'a> {
    degrees: Vec<i64>,
    free: &'a [usize],
    boxes: Vec<(i64, i64)>,
    /// Suffix sums of box bounds over free positions `i..` excluding the last.
    rest_min: Vec<i64>,
    rest_max: Vec<i64>,
    last_box: Option<(i64, i64)>,
    by_level: Vec<Vec<Constraint>>,
}

/// All vectors agreeing with `base` off `free`, summing to `total` and
/// satisfying every constraint.
pub(crate) fn solve(
    base: &[i64],
    free: &[usize],
    constraints: &[Constraint],
    total: i64,
    out: &mut Vec<Vec<i64>>,
) -> Result<()> {
    let free_set: VertexSet = free.iter().copied().collect();
    let fixed_sum: i64 = (0..base.len())
        .filter(|v| !free_set.contains(*v))
        .map(|v| base[v])
        .sum();

    let mut by_level: Vec<Vec<Constraint>> = vec![Vec::new(); free.len()];
    for c in constraints {
        let level = free.iter().rposition(|v| c.set.contains(*v));
        match level {
            Some(level) => by_level[level].push(*c),
            None => {
                let deg: i64 = c.set.iter().map(|v| base[v]).sum();
                if !c.bounds.admits(deg) {
                    return Ok(());
                }
            }
        }
    }

    let Some((&last, head)) = free.split_last() else {
        if fixed_sum == total {
            out.push(base.to_vec());
        }
        return Ok(());
    };

    let singleton_box = |v: usize| {
        constraints
            .iter()
            .filter(|c| c.set == VertexSet::singleton(v))
            .fold(None, |acc: Option<(i64, i64)>, c| {
                let (lo, hi) = (c.bounds.ceil_lower(), c.bounds.floor_upper());
                Some(match acc {
                    Some((a, b)) => (a.max(lo), b.min(hi)),
                    None => (lo, hi),
                })
            })
    };
    let mut boxes = Vec::with_capacity(head.len());
    for &v in head {
        boxes.push(singleton_box(v).ok_or_else(|| {
            Error::Internal(format!("vertex index {v} has no singleton bound"))
        })?);
    }
    let last_box = singleton_box(last);
    if boxes.iter().chain(&last_box).any(|(lo, hi)| lo > hi) {
        return Ok(());
    }

    let m = head.len();
    let mut rest_min = vec![0; m + 1];
    let mut rest_max = vec![0; m + 1];
    for i in (0..m).rev() {
        rest_min[i] = rest_min[i + 1] + boxes[i].0;
        rest_max[i] = rest_max[i + 1] + boxes[i].1;
    }

    let mut search = Search {
        degrees: base.to_vec(),
        free,
        boxes,
        rest_min,
        rest_max,
        last_box,
        by_level,
    };
    search.descend(0, total - fixed_sum, out);
    Ok(())
}

impl Search<'_> {
    fn level_ok(&self, level: usize) -> bool {
        self.by_level[level].iter().all(|c| {
            let deg: i64 = c.set.iter().map(|v| self.degrees[v]).sum();
            c.bounds.admits(deg)
        })
    }

    fn descend(&mut self, pos: usize, remaining: i64, out: &mut Vec<Vec<i64>>) {
        let m = self.free.len() - 1;
        if pos == m {
            if let Some((lo, hi)) = self.last_box {
                if remaining < lo || remaining > hi {
                    return;
                }
            }
            self.degrees[self.free[m]] = remaining;
            if self.level_ok(m) {
                out.push(self.degrees.clone());
            }
            return;
        }
        let (lo, hi) = self.boxes[pos];
        // What the later positions can still absorb.
        let (after_min, after_max) = (self.rest_min[pos + 1], self.rest_max[pos + 1]);
        let (last_lo, last_hi) = self.last_box.unwrap_or((i64::MIN / 4, i64::MAX / 4));
        let lo = lo.max(remaining - after_max - last_hi);
        let hi = hi.min(remaining - after_min - last_lo);
        let v = self.free[pos];
        for x in lo..=hi {
            self.degrees[v] = x;
            if self.level_ok(pos) {
                self.descend(pos + 1, remaining - x, out);
            }
        }
    }
}
