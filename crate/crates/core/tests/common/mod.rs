#![allow(dead_code)]

use toric_core::Configuration;

/// Strictly increasing tuples of length `k` from `1..=max`.
pub fn tuples(max: i64, k: usize) -> Vec<Vec<i64>> {
    fn go(start: i64, max: i64, k: usize, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=max {
            cur.push(x);
            go(x + 1, max, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, max, k, &mut Vec::new(), &mut out);
    out
}

/// Curves with two to four distinct entries, each at most `max`.
pub fn corpus(max: i64) -> Vec<Configuration> {
    (2..=4)
        .flat_map(|k| tuples(max, k))
        .map(|a| Configuration::curve(&a).expect("positive entries"))
        .collect()
}
