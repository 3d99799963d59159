use crate::error::{Error, Result};

/// Size limits for the exhaustive computations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub hasse: usize,
    pub kl: usize,
    pub crystal: usize,
    pub canonical: usize,
    pub specht: usize,
    pub insertion: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            hasse: 10,
            kl: 4,
            crystal: 12,
            canonical: 6,
            specht: 3,
            insertion: 5,
        }
    }
}

impl Bounds {
    /// Limits with every field set to `n`.
    pub fn uniform(n: usize) -> Self {
        Bounds {
            hasse: n,
            kl: n,
            crystal: n,
            canonical: n,
            specht: n,
            insertion: n,
        }
    }

    pub(crate) fn check(what: &'static str, n: usize, bound: usize) -> Result<()> {
        if n > bound {
            Err(Error::BoundExceeded { what, n, bound })
        } else {
            Ok(())
        }
    }
}
