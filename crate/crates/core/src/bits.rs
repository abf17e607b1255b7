//! Bitmask helpers shared by the poset and set-family code.

/// Iterates the indices of set bits, lowest first.
#[inline]
pub fn bits(mut mask: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i)
        }
    })
}

#[inline]
pub fn popcount(mask: u64) -> u32 {
    mask.count_ones()
}

/// Mask of the lowest `k` bits.
#[inline]
pub fn low_bits(k: usize) -> u64 {
    if k >= 64 {
        u64::MAX
    } else {
        (1u64 << k) - 1
    }
}

/// `a ⊊ b` for sets encoded as bitmasks.
#[inline]
pub fn proper_subset(a: u64, b: u64) -> bool {
    a != b && a & !b == 0
}

/// All `k`-subsets of `[n]` in increasing numeric order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = u64> {
    let limit = low_bits(n);
    let mut next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some(low_bits(k))
    };
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur.checked_add(c);
            match r {
                Some(r) => {
                    let nxt = (((r ^ cur) >> 2) / c) | r;
                    if nxt & !limit != 0 {
                        None
                    } else {
                        Some(nxt)
                    }
                }
                None => None,
            }
        };
        Some(cur)
    })
}

/// Renders a subset as its sorted 1-based element list.
pub fn set_elements(mask: u64) -> Vec<usize> {
    bits(mask).map(|i| i + 1).collect()
}

/// Human-readable subset, e.g. `{1,3}`.
pub fn format_set(mask: u64) -> String {
    let parts: Vec<String> = bits(mask).map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", parts.join(","))
}
