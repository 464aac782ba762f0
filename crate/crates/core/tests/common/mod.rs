//! Brute-force oracles shared by the integration tests. None of them use
//! the library's search or word code.
#![allow(dead_code)]

use nonrep::Graph;

/// Thue word from Thue–Morse: the number of 1s between consecutive 0s,
/// read as 2 → 0, 1 → 1, 0 → 2 (so the word starts `a b c a c b`).
pub fn thue(len: usize) -> Vec<u8> {
    let tm = |i: usize| i.count_ones() % 2;
    let mut out = Vec::with_capacity(len);
    let mut i = 1;
    while out.len() < len {
        let mut ones = 0;
        while tm(i) == 1 {
            ones += 1;
            i += 1;
        }
        i += 1;
        assert!(ones <= 2, "Thue–Morse is overlap-free");
        out.push(2 - ones);
    }
    out
}

/// The palindrome-free word: 3 at multiples of 3, the Thue word elsewhere.
pub fn thue_star(len: usize) -> Vec<u8> {
    let t = thue(len);
    (0..len)
        .map(|n| if n % 3 == 0 { 3 } else { t[n - n / 3] })
        .collect()
}

pub fn string_of(symbols: &[u8]) -> String {
    symbols.iter().map(|&s| (b'a' + s) as char).collect()
}

pub fn naive_square(s: &[u8]) -> Option<(usize, usize)> {
    for start in 0..s.len() {
        for half in 1..=(s.len() - start) / 2 {
            if s[start..start + half] == s[start + half..start + 2 * half] {
                return Some((start, 2 * half));
            }
        }
    }
    None
}

pub fn naive_palindrome(s: &[u8]) -> Option<(usize, usize)> {
    for start in 0..s.len() {
        for len in 2..=s.len() - start {
            let f = &s[start..start + len];
            if f.iter().eq(f.iter().rev()) {
                return Some((start, len));
            }
        }
    }
    None
}

/// Every simple path of at most `max_len` vertices, in lexicographic order.
pub fn simple_paths(g: &Graph, max_len: usize, f: &mut impl FnMut(&[usize])) {
    fn go(
        g: &Graph,
        path: &mut Vec<usize>,
        on: &mut [bool],
        max_len: usize,
        f: &mut impl FnMut(&[usize]),
    ) {
        f(path);
        if path.len() == max_len {
            return;
        }
        let last = *path.last().unwrap();
        for u in 0..g.vertex_count() {
            if !on[u] && g.is_adjacent(last, u) {
                on[u] = true;
                path.push(u);
                go(g, path, on, max_len, f);
                path.pop();
                on[u] = false;
            }
        }
    }
    let mut on = vec![false; g.vertex_count()];
    for s in 0..g.vertex_count() {
        on[s] = true;
        go(g, &mut vec![s], &mut on, max_len, f);
        on[s] = false;
    }
}

pub fn is_square_path(colors: &[u32], path: &[usize]) -> bool {
    let k = path.len() / 2;
    path.len().is_multiple_of(2) && k > 0 && (0..k).all(|i| colors[path[i]] == colors[path[i + k]])
}

/// Smallest repetitive path by (length, vertex sequence).
pub fn naive_witness(g: &Graph, colors: &[u32], k_max: usize) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    simple_paths(g, 2 * k_max, &mut |p| {
        if is_square_path(colors, p)
            && best
                .as_ref()
                .is_none_or(|b| (p.len(), p) < (b.len(), &b[..]))
        {
            best = Some(p.to_vec());
        }
    });
    best
}
