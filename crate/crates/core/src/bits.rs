//! Small helpers over `u64` vertex bitsets.

/// Iterator over the indices of set bits, lowest first.
#[derive(Clone, Copy, Debug)]
pub struct Ones(u64);

impl Iterator for Ones {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let i = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let c = self.0.count_ones() as usize;
        (c, Some(c))
    }
}

impl ExactSizeIterator for Ones {}

#[inline]
pub fn ones(bits: u64) -> Ones {
    Ones(bits)
}

/// Mask with the lowest `n` bits set (`n <= 64`).
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Packs the bits of `value` selected by `mask` into the low bits, keeping order.
#[inline]
pub fn compress(value: u64, mask: u64) -> u64 {
    let mut out = 0u64;
    for (k, i) in ones(mask).enumerate() {
        out |= (value >> i & 1) << k;
    }
    out
}
