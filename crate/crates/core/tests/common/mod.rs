//! Reference computations that share no code with the library: degrees are
//! recounted from raw edge lists and every class is enumerated literally.

#![allow(dead_code)]

pub fn degrees_from_edges(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut deg = vec![0; n];
    for &(a, b) in edges {
        deg[a] += 1;
        deg[b] += 1;
    }
    deg
}

pub fn irr_of_degrees(deg: &[usize]) -> u64 {
    let mut total = 0u64;
    for i in 0..deg.len() {
        for j in (i + 1)..deg.len() {
            total += deg[i].abs_diff(deg[j]) as u64;
        }
    }
    total
}

pub fn irr_edges(n: usize, edges: &[(usize, usize)]) -> u64 {
    irr_of_degrees(&degrees_from_edges(n, edges))
}

/// `(irr_in, irr_out)` recounted from an arc list.
pub fn irr_arcs(n: usize, arcs: &[(usize, usize)]) -> (u64, u64) {
    let mut ins = vec![0; n];
    let mut outs = vec![0; n];
    for &(t, h) in arcs {
        outs[t] += 1;
        ins[h] += 1;
    }
    (irr_of_degrees(&ins), irr_of_degrees(&outs))
}

fn count(it: impl Iterator<Item = bool>) -> usize {
    it.filter(|&b| b).count()
}

/// Joint class sizes `[a, b, a*, b*, c, d, c*, d*]` for endpoints `u` of
/// `g1` and `v` of `g2`, from the two degree lists.
pub fn joint_classes(g1: &[usize], g2: &[usize], u: usize, v: usize) -> [usize; 8] {
    let (du, dv) = (g1[u], g2[v]);
    [
        count(g1.iter().enumerate().map(|(x, &d)| x != u && d <= du)),
        count(g1.iter().enumerate().map(|(x, &d)| x != u && d > du)),
        count(g2.iter().map(|&d| d <= du)),
        count(g2.iter().map(|&d| d > du)),
        count(g2.iter().enumerate().map(|(x, &d)| x != v && d <= dv)),
        count(g2.iter().enumerate().map(|(x, &d)| x != v && d > dv)),
        count(g1.iter().map(|&d| d <= dv)),
        count(g1.iter().map(|&d| d > dv)),
    ]
}

/// Transformation class sizes `[h, s, t, m, l, m1, l1]` when `losing`
/// gives one degree to `receiving`, degrees taken before the move.
pub fn transform_classes(deg: &[usize], losing: usize, receiving: usize) -> [usize; 7] {
    let theta = deg[losing] as i64 - 1;
    let dr = deg[receiving];
    let d = |x: usize| deg[x] as i64;
    let others = || (0..deg.len()).filter(move |&x| x != losing);
    let h = 1 + others().filter(|&x| d(x) == theta).count();
    let s_class: Vec<usize> = others().filter(|&x| d(x) > theta).collect();
    let t_class: Vec<usize> = others().filter(|&x| d(x) < theta).collect();
    let m = s_class.iter().filter(|&&x| deg[x] <= dr).count();
    let m1 = t_class.iter().filter(|&&x| deg[x] <= dr).count();
    [h, s_class.len(), t_class.len(), m, s_class.len() - m, m1, t_class.len() - m1]
}

/// Simple graph on `n` vertices from candidate pairs: loops and repeats
/// dropped, pairs normalized.
pub fn simple_edges(n: usize, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut edges: Vec<(usize, usize)> = pairs
        .iter()
        .map(|&(a, b)| (a % n, b % n))
        .filter(|&(a, b)| a != b)
        .map(|(a, b)| (a.min(b), a.max(b)))
        .collect();
    edges.sort_unstable();
    edges.dedup();
    edges
}

/// Arcs without loops or repeats; antiparallel pairs are kept.
pub fn simple_arcs(n: usize, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut arcs: Vec<(usize, usize)> =
        pairs.iter().map(|&(a, b)| (a % n, b % n)).filter(|&(a, b)| a != b).collect();
    arcs.sort_unstable();
    arcs.dedup();
    arcs
}
