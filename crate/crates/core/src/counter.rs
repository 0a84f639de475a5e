use std::iter::Sum;
use std::ops::{Add, AddAssign};

use serde::{Deserialize, Serialize};

/// Work counters threaded through transforms.
///
/// `dft_points` counts output points produced by DFT/FFT work. `ext_mem_points`
/// counts matrix points read from (simulated) external memory to feed that work.
/// Counters only grow; parallel passes accumulate into local counters that are
/// summed at pass end.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OpCounter {
    pub dft_points: u64,
    pub ext_mem_points: u64,
}

impl OpCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dft(points: usize) -> Self {
        Self {
            dft_points: points as u64,
            ext_mem_points: 0,
        }
    }

    pub fn add_dft_points(&mut self, points: usize) {
        self.dft_points += points as u64;
    }

    pub fn add_ext_mem_points(&mut self, points: usize) {
        self.ext_mem_points += points as u64;
    }
}

impl Add for OpCounter {
    type Output = OpCounter;

    fn add(self, rhs: OpCounter) -> OpCounter {
        OpCounter {
            dft_points: self.dft_points + rhs.dft_points,
            ext_mem_points: self.ext_mem_points + rhs.ext_mem_points,
        }
    }
}

impl AddAssign for OpCounter {
    fn add_assign(&mut self, rhs: OpCounter) {
        *self = *self + rhs;
    }
}

impl Sum for OpCounter {
    fn sum<I: Iterator<Item = OpCounter>>(iter: I) -> OpCounter {
        iter.fold(OpCounter::default(), Add::add)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merge_by_addition() {
        let parts = [OpCounter::dft(3), OpCounter::dft(4), OpCounter::default()];
        let total: OpCounter = parts.iter().copied().sum();
        assert_eq!(total.dft_points, 7);
        let mut c = OpCounter::new();
        c.add_ext_mem_points(5);
        c += total;
        assert_eq!(
            c,
            OpCounter {
                dft_points: 7,
                ext_mem_points: 5
            }
        );
    }
}
