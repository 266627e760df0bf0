//! Bipartite maximum matching (Hopcroft–Karp).

use std::collections::VecDeque;

const NIL: usize = usize::MAX;

/// A maximum matching of a bipartite graph given by left-side adjacency lists.
/// `mate_left[l]` / `mate_right[r]` hold the partner, if any.
#[derive(Debug, Clone)]
pub(crate) struct BipartiteMatching {
    pub mate_left: Vec<Option<usize>>,
    pub mate_right: Vec<Option<usize>>,
}

impl BipartiteMatching {
    pub fn size(&self) -> usize {
        self.mate_left.iter().filter(|m| m.is_some()).count()
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mate_left
            .iter()
            .enumerate()
            .filter_map(|(l, r)| r.map(|r| (l, r)))
    }
}

pub(crate) fn hopcroft_karp(right_len: usize, adj: &[Vec<usize>]) -> BipartiteMatching {
    let left_len = adj.len();
    let mut mate_l = vec![NIL; left_len];
    let mut mate_r = vec![NIL; right_len];
    let mut dist = vec![0usize; left_len];
    let mut queue = VecDeque::new();

    loop {
        // BFS layering from free left vertices.
        queue.clear();
        let mut found_free = false;
        for l in 0..left_len {
            if mate_l[l] == NIL {
                dist[l] = 0;
                queue.push_back(l);
            } else {
                dist[l] = usize::MAX;
            }
        }
        while let Some(l) = queue.pop_front() {
            for &r in &adj[l] {
                let next = mate_r[r];
                if next == NIL {
                    found_free = true;
                } else if dist[next] == usize::MAX {
                    dist[next] = dist[l] + 1;
                    queue.push_back(next);
                }
            }
        }
        if !found_free {
            break;
        }
        let mut iter = vec![0usize; left_len];
        for l in 0..left_len {
            if mate_l[l] == NIL {
                augment(l, adj, &mut mate_l, &mut mate_r, &mut dist, &mut iter);
            }
        }
    }

    let opt = |v: usize| (v != NIL).then_some(v);
    BipartiteMatching {
        mate_left: mate_l.into_iter().map(opt).collect(),
        mate_right: mate_r.into_iter().map(opt).collect(),
    }
}

fn augment(
    l: usize,
    adj: &[Vec<usize>],
    mate_l: &mut [usize],
    mate_r: &mut [usize],
    dist: &mut [usize],
    iter: &mut [usize],
) -> bool {
    while iter[l] < adj[l].len() {
        let r = adj[l][iter[l]];
        iter[l] += 1;
        let next = mate_r[r];
        let ok = next == NIL
            || (dist[next] == dist[l] + 1 && augment(next, adj, mate_l, mate_r, dist, iter));
        if ok {
            mate_l[l] = r;
            mate_r[r] = l;
            return true;
        }
    }
    dist[l] = usize::MAX;
    false
}

/// Advances `idx` (strictly increasing indices into `0..len`) to the next
/// combination in lexicographic order. Returns false when exhausted.
pub(crate) fn next_combination(idx: &mut [usize], len: usize) -> bool {
    let r = idx.len();
    let mut i = r;
    while i > 0 {
        i -= 1;
        if idx[i] < len - r + i {
            idx[i] += 1;
            for j in i + 1..r {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
