//! Deterministic simulated-annealing search for arrangements of `1..=rows*cols`
//! with prescribed row and column sums.
//!
//! Used for the magic and nearly magic rectangles that have no direct
//! construction here. Every answer is checked by the verifier before a
//! constructor hands it out, so the search only needs to be effective, not
//! clever.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::matrix::IntMatrix;

/// Seed of the first annealing run; later restarts derive from it.
pub const SOLVER_SEED: u64 = 0x6d61_6769_635f_7265;

const MAX_RESTARTS: u64 = 12;

#[derive(Debug, Clone)]
pub struct SumTargets {
    pub rows: Vec<i64>,
    pub cols: Vec<i64>,
}

impl SumTargets {
    fn validate(&self) -> Result<()> {
        let n = (self.rows.len() * self.cols.len()) as i64;
        let total = n * (n + 1) / 2;
        if self.rows.iter().sum::<i64>() != total || self.cols.iter().sum::<i64>() != total {
            return Err(Error::invalid(format!(
                "row/column targets do not add up to 1 + .. + {n} = {total}"
            )));
        }
        Ok(())
    }
}

/// Finds an arrangement meeting `targets`, or fails after a bounded number
/// of restarts.
pub fn anneal(targets: &SumTargets, seed: u64) -> Result<IntMatrix> {
    targets.validate()?;
    let (a, b) = (targets.rows.len(), targets.cols.len());
    let budget = 40_000_000u64.max(60_000 * (a * b) as u64);
    for attempt in 0..MAX_RESTARTS {
        let run_seed = seed.wrapping_add(attempt.wrapping_mul(0x9e37_79b9_7f4a_7c15));
        if let Some(grid) = run(targets, run_seed, budget) {
            return IntMatrix::new(a, b, grid);
        }
    }
    Err(Error::Construction(format!(
        "annealing found no {a}x{b} arrangement after {MAX_RESTARTS} restarts"
    )))
}

fn run(targets: &SumTargets, seed: u64, budget: u64) -> Option<Vec<u32>> {
    let (a, b) = (targets.rows.len(), targets.cols.len());
    let n = a * b;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut grid: Vec<u32> = (1..=n as u32).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        grid.swap(i, j);
    }

    // signed deviations from the targets
    let mut rdev: Vec<i64> = targets.rows.iter().map(|t| -t).collect();
    let mut cdev: Vec<i64> = targets.cols.iter().map(|t| -t).collect();
    for (k, &v) in grid.iter().enumerate() {
        rdev[k / b] += i64::from(v);
        cdev[k % b] += i64::from(v);
    }
    let mut energy: i64 = rdev.iter().chain(&cdev).map(|d| d * d).sum();

    let mut temperature = n as f64;
    let mut iter = 0u64;
    while energy > 0 {
        iter += 1;
        if iter > budget {
            return None;
        }
        if iter & 1023 == 0 {
            temperature = (temperature * 0.999).max(0.3);
        }
        let p = rng.gen_range(0..n);
        let q = rng.gen_range(0..n);
        if p == q {
            continue;
        }
        let (i1, j1, i2, j2) = (p / b, p % b, q / b, q % b);
        let d = i64::from(grid[q]) - i64::from(grid[p]);
        let mut delta = 0;
        if i1 != i2 {
            let (r1, r2) = (rdev[i1], rdev[i2]);
            delta += (r1 + d) * (r1 + d) - r1 * r1 + (r2 - d) * (r2 - d) - r2 * r2;
        }
        if j1 != j2 {
            let (c1, c2) = (cdev[j1], cdev[j2]);
            delta += (c1 + d) * (c1 + d) - c1 * c1 + (c2 - d) * (c2 - d) - c2 * c2;
        }
        let accept = delta <= 0 || rng.gen::<f64>() < (-(delta as f64) / temperature).exp();
        if accept {
            grid.swap(p, q);
            if i1 != i2 {
                rdev[i1] += d;
                rdev[i2] -= d;
            }
            if j1 != j2 {
                cdev[j1] += d;
                cdev[j2] -= d;
            }
            energy += delta;
        }
    }
    Some(grid)
}
