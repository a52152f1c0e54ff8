/// Enumeration and oracle caps. These are configuration, not hard limits;
/// callers raise them explicitly.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Maximum number of permutations enumerated for a LOP vertex set
    /// (default `8! = 40320`).
    pub max_perms: u64,
    /// Largest `m` for the brute-force 3-cycle filter over `{0,1}^C(m,2)`.
    pub oracle_max_m: usize,
    /// Largest column count for the double-covering verifier.
    pub max_cols: usize,
    /// Largest column count for naive `2^n` double-covering enumeration.
    pub naive_max_cols: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_perms: 40_320,
            oracle_max_m: 6,
            max_cols: 18,
            naive_max_cols: 20,
        }
    }
}

impl Limits {
    pub fn check_perms(&self, m: usize) -> crate::Result<()> {
        let count = (1..=m as u64).try_fold(1u64, |acc, k| acc.checked_mul(k)).unwrap_or(u64::MAX);
        if count > self.max_perms {
            return Err(crate::Error::Capacity {
                what: "permutation enumeration",
                requested: count,
                cap: self.max_perms,
            });
        }
        Ok(())
    }
}
