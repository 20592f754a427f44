//! Resource limits shared by constructors and counting kernels.

use std::sync::atomic::{AtomicUsize, Ordering};

use crate::error::{Error, Result};

/// Default cap on predicted elementary operations for enumerative kernels.
pub const DEFAULT_WORK_CAP: u128 = 1_000_000_000;

/// Default maximum vertex count (adjacency for 20000 vertices is about 50 MB).
pub const DEFAULT_MAX_ORDER: usize = 20_000;

/// Above this adjacency size `set_max_order` refuses outright.
pub const HARD_MEMORY_LIMIT_BYTES: u128 = 4 << 30;

static MAX_ORDER: AtomicUsize = AtomicUsize::new(DEFAULT_MAX_ORDER);

/// Bytes used by one bit matrix with `n` rows.
pub fn adjacency_bytes(n: usize) -> u128 {
    let words = n.div_ceil(64) as u128;
    n as u128 * words * 8
}

pub fn max_order() -> usize {
    MAX_ORDER.load(Ordering::Relaxed)
}

/// Raises or lowers the process-wide vertex cap.
pub fn set_max_order(n: usize) -> Result<()> {
    let bytes = adjacency_bytes(n);
    if bytes > HARD_MEMORY_LIMIT_BYTES {
        return Err(Error::Refused {
            what: format!("max order {n} (adjacency {bytes} bytes)"),
            estimate: bytes,
            cap: HARD_MEMORY_LIMIT_BYTES,
        });
    }
    MAX_ORDER.store(n, Ordering::Relaxed);
    Ok(())
}

pub(crate) fn check_order(n: usize) -> Result<()> {
    let cap = max_order();
    if n > cap {
        return Err(Error::Refused {
            what: format!("object with {n} vertices (max order {cap})"),
            estimate: adjacency_bytes(n),
            cap: adjacency_bytes(cap),
        });
    }
    Ok(())
}

pub(crate) fn check_work(what: impl FnOnce() -> String, estimate: u128, cap: u128) -> Result<()> {
    if estimate > cap {
        return Err(Error::Refused {
            what: what(),
            estimate,
            cap,
        });
    }
    Ok(())
}
