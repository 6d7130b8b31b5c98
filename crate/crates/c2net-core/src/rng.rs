//! Seed derivation for independent deterministic streams.

/// SplitMix64 step; maps (seed, stream) to a well-mixed sub-seed so that
/// parallel streams (BS vs user sampling, per-trial fading draws) stay
/// decorrelated while the whole run remains a pure function of one seed.
pub(crate) fn derive_seed(seed: u64, stream: u64) -> u64 {
    let mut z = seed
        .wrapping_add(0x9e3779b97f4a7c15u64.wrapping_mul(stream.wrapping_add(1)));
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}
