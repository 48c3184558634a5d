//! Operation counting for the complexity experiments.
//!
//! Algorithms that take part in the benchmark are generic over [`Meter`].
//! Passing `&mut ()` compiles the counting away; passing an [`OpCount`]
//! records one tick per elementary step of the inner loops.

pub trait Meter {
    fn tick(&mut self, ops: u64);
}

impl Meter for () {
    #[inline(always)]
    fn tick(&mut self, _ops: u64) {}
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq)]
pub struct OpCount(pub u64);

impl Meter for OpCount {
    #[inline(always)]
    fn tick(&mut self, ops: u64) {
        self.0 += ops;
    }
}
