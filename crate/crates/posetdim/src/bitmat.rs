//! Packed boolean square matrix backing closed order relations.

const WORD: usize = 64;

#[derive(Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    n: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words = n.div_ceil(WORD);
        BitMatrix {
            n,
            words,
            data: vec![0; n * words],
        }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i * self.words + j / WORD] & (1 << (j % WORD)) != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / WORD] |= 1 << (j % WORD);
    }

    pub fn clear(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / WORD] &= !(1 << (j % WORD));
    }

    /// data[dst] |= data[src], row-wise.
    fn or_row_into(&mut self, src: usize, dst: usize) {
        if src == dst {
            return;
        }
        let (s, d) = (src * self.words, dst * self.words);
        for w in 0..self.words {
            let v = self.data[s + w];
            self.data[d + w] |= v;
        }
    }

    /// Warshall closure by row bit-ORs.
    pub fn transitive_close(&mut self) {
        for k in 0..self.n {
            for i in 0..self.n {
                if i != k && self.get(i, k) {
                    self.or_row_into(k, i);
                }
            }
        }
    }

    /// Insert edge x -> y into an already transitively closed digraph and
    /// restore closure. The caller must rule out y -> x beforehand.
    pub fn add_edge_closed(&mut self, x: usize, y: usize) {
        if self.get(x, y) {
            return;
        }
        for a in 0..self.n {
            if a == x || self.get(a, x) {
                self.or_row_into(y, a);
                self.set(a, y);
            }
        }
    }
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix({})", self.n)?;
        for i in 0..self.n {
            for j in 0..self.n {
                write!(f, "{}", if self.get(i, j) { '1' } else { '.' })?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closure_is_idempotent() {
        let mut m = BitMatrix::new(4);
        m.set(0, 1);
        m.set(1, 2);
        m.set(2, 3);
        m.transitive_close();
        assert!(m.get(0, 3));
        let snapshot = m.clone();
        m.transitive_close();
        assert_eq!(m, snapshot);
    }

    #[test]
    fn incremental_edge_matches_batch_closure() {
        let mut a = BitMatrix::new(5);
        a.set(0, 1);
        a.set(2, 3);
        a.transitive_close();
        a.add_edge_closed(1, 2);

        let mut b = BitMatrix::new(5);
        b.set(0, 1);
        b.set(2, 3);
        b.set(1, 2);
        b.transitive_close();

        assert_eq!(a, b);
    }
}
