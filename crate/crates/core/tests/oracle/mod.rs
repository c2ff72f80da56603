//! Brute-force reference implementations, written straight from the
//! definitions with no shortcuts shared with the library.

#![allow(dead_code)]

use semitop::{ElemSet, PointSet, Semiframe, Semitopology};

/// Every completely prime semifilter, found by enumerating all subsets.
///
/// Complete primeness is checked against the join of every subset of the
/// complement when the semiframe has at most 16 elements; larger ones use
/// the empty join plus binary joins.
pub fn abstract_points(x: &Semiframe) -> Vec<ElemSet> {
    let n = x.len();
    assert!(n <= 24, "oracle enumeration is exhaustive");
    let bits = |s: &ElemSet| s.iter().fold(0u32, |m, i| m | (1 << i));
    let up: Vec<u32> = (0..n).map(|i| bits(x.up_set(i))).collect();
    let compat: Vec<u32> = (0..n).map(|i| bits(x.compat_system(i))).collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };

    let joins: Option<Vec<usize>> = (n <= 16).then(|| {
        let mut j = vec![x.bottom(); 1 << n];
        for s in 1usize..(1 << n) {
            let low = s.trailing_zeros() as usize;
            j[s] = x.join(j[s & (s - 1)], low);
        }
        j
    });

    let mut found = Vec::new();
    for mask in 1u32..=full {
        let members = || (0..n).filter(move |&i| mask & (1 << i) != 0);
        if members().any(|i| up[i] & !mask != 0) {
            continue;
        }
        if members().any(|i| mask & !compat[i] != 0) {
            continue;
        }
        let outside = full & !mask;
        let prime = match &joins {
            Some(j) => {
                let mut s = outside;
                loop {
                    if mask & (1 << j[s as usize]) != 0 {
                        break false;
                    }
                    if s == 0 {
                        break true;
                    }
                    s = (s - 1) & outside;
                }
            }
            None => {
                let outs: Vec<usize> = (0..n).filter(|&i| outside & (1 << i) != 0).collect();
                mask & (1 << x.bottom()) == 0
                    && outs
                        .iter()
                        .all(|&a| outs.iter().all(|&b| mask & (1 << x.join(a, b)) == 0))
            }
        };
        if prime {
            found.push(ElemSet::from_indices(n, members()));
        }
    }
    found.sort();
    found
}

/// `q` is intertwined with `p` when every open containing `p` meets every
/// open containing `q`.
pub fn intertwined(s: &Semitopology, p: usize) -> PointSet {
    let n = s.num_points();
    PointSet::from_indices(
        n,
        (0..n).filter(|&q| {
            s.opens().iter().filter(|o| o.contains(p)).all(|o| {
                s.opens()
                    .iter()
                    .filter(|o2| o2.contains(q))
                    .all(|o2| o.meets(o2))
            })
        }),
    )
}

/// Closed sets `C` with `p` in the interior of `C`.
pub fn closed_neighbourhoods_of(s: &Semitopology, p: usize) -> Vec<PointSet> {
    s.closed_sets()
        .into_iter()
        .filter(|c| s.interior(c).unwrap().contains(p))
        .collect()
}

/// Closed sets with nonempty interior.
pub fn closed_neighbourhoods(s: &Semitopology) -> Vec<PointSet> {
    s.closed_sets()
        .into_iter()
        .filter(|c| !s.interior(c).unwrap().is_empty())
        .collect()
}

/// Every semitopology on `n` labelled points, by enumerating families of
/// proper nonempty subsets and keeping the union-closed ones.
pub fn all_spaces(n: usize) -> Vec<Semitopology> {
    assert!(n <= 4);
    let full: u128 = (1u128 << n) - 1;
    let middle: Vec<u128> = (1..full).collect();
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let mut out = Vec::new();
    for choice in 0u64..(1u64 << middle.len()) {
        let mut fam: Vec<u128> = vec![0, full];
        fam.extend(
            middle
                .iter()
                .enumerate()
                .filter(|(i, _)| choice & (1 << i) != 0)
                .map(|(_, &m)| m),
        );
        let closed = fam.iter().all(|a| fam.iter().all(|b| fam.contains(&(a | b))));
        if closed {
            let opens: Vec<PointSet> = fam.iter().map(|&m| PointSet::from_mask(n, m)).collect();
            out.push(
                Semitopology::from_generator_sets(names.clone(), opens, 1 << 20)
                    .expect("small families"),
            );
        }
    }
    out
}
