//! Exact maximum Sidon sets in a small finite abelian group.
//!
//! The group is abstracted as a subtraction table over indices `0..n`; both the Sidon oracle over cyclic products and the
//! doubly periodic DDC oracle over `Z^2 / L` reduce to this.

/// Subtraction table of a finite abelian group on `0..n`.
pub(crate) struct DifferenceTable {
    n: usize,
    sub: Vec<u32>,
}

impl DifferenceTable {
    pub(crate) fn new(n: usize, sub: impl Fn(usize, usize) -> usize) -> Self {
        let mut table = Vec::with_capacity(n * n);
        for a in 0..n {
            for b in 0..n {
                table.push(sub(a, b) as u32);
            }
        }
        DifferenceTable { n, sub: table }
    }

    fn sub(&self, a: usize, b: usize) -> usize {
        self.sub[a * self.n + b] as usize
    }
}

/// Largest `m` with `m(m-1) <= n-1`: the `m(m-1)` ordered differences of a
/// Sidon set are distinct and nonzero.
pub fn counting_bound(n: u64) -> usize {
    let mut m = 1u64;
    while (m + 1) * m <= n.saturating_sub(1) {
        m += 1;
    }
    m as usize
}

/// The lexicographically smallest Sidon set containing index 0 among those
/// of maximum size. Any Sidon set can be translated to contain index 0, so
/// this is a global maximum.
pub(crate) fn max_sidon(table: &DifferenceTable) -> Vec<usize> {
    let n = table.n;
    if n == 0 {
        return Vec::new();
    }
    for target in (1..=counting_bound(n as u64)).rev() {
        let mut search = Search {
            table,
            target,
            set: vec![0],
            used: vec![false; n],
            scratch: Vec::new(),
        };
        if search.extend(1) {
            return search.set;
        }
    }
    unreachable!("a single element is always Sidon")
}

struct Search<'a> {
    table: &'a DifferenceTable,
    target: usize,
    set: Vec<usize>,
    used: Vec<bool>,
    scratch: Vec<usize>,
}

impl Search<'_> {
    fn extend(&mut self, from: usize) -> bool {
        if self.set.len() == self.target {
            return true;
        }
        let n = self.table.n;
        let missing = self.target - self.set.len();
        let mut x = from;
        while x + missing <= n {
            if self.try_add(x) {
                self.set.push(x);
                if self.extend(x + 1) {
                    return true;
                }
                self.set.pop();
                self.remove(x);
            }
            x += 1;
        }
        false
    }

    /// Marks the differences `x - y` and `y - x` for every `y` in the set,
    /// failing (and rolling back) on the first repeat.
    fn try_add(&mut self, x: usize) -> bool {
        self.scratch.clear();
        for i in 0..self.set.len() {
            let y = self.set[i];
            for d in [self.table.sub(x, y), self.table.sub(y, x)] {
                if self.used[d] {
                    for &u in &self.scratch {
                        self.used[u] = false;
                    }
                    return false;
                }
                self.used[d] = true;
                self.scratch.push(d);
            }
        }
        true
    }

    fn remove(&mut self, x: usize) {
        for &y in &self.set {
            self.used[self.table.sub(x, y)] = false;
            self.used[self.table.sub(y, x)] = false;
        }
    }
}
