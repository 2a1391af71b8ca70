//! Compensated summation for deterministic reductions.
//!
//! Millions of strip contributions amplify naive-summation error, so every
//! accumulation in this crate goes through a Neumaier-compensated sum and
//! consumes its terms in input order. That keeps results bit-reproducible
//! across runs and across the serial/parallel paths.

/// Running sum with first-order error compensation (Kahan improved by
/// Neumaier: the correction also survives when the addend dominates).
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct NeumaierSum {
    sum: f64,
    compensation: f64,
}

impl NeumaierSum {
    pub(crate) fn add(&mut self, value: f64) {
        let t = self.sum + value;
        if self.sum.abs() >= value.abs() {
            self.compensation += (self.sum - t) + value;
        } else {
            self.compensation += (value - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(&self) -> f64 {
        self.sum + self.compensation
    }
}
