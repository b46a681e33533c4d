//! Small square matrices over a prime field.

pub const MAX_DIM: usize = 4;

/// Arithmetic tables for `F_p`.
#[derive(Debug, Clone)]
pub struct PrimeField {
    p: u8,
    inv: Vec<u8>,
    dlog: Vec<u32>,
    generator: u8,
}

pub fn is_prime(n: u32) -> bool {
    n >= 2 && (2..n).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

impl PrimeField {
    pub fn new(p: u32) -> Option<Self> {
        if !is_prime(p) || p > 251 {
            return None;
        }
        let p8 = p as u8;
        let mut inv = vec![0u8; p as usize];
        for a in 1..p {
            inv[a as usize] = (1..p).find(|b| a * b % p == 1).unwrap() as u8;
        }
        let order_of = |g: u32| {
            let mut x = g % p;
            let mut k = 1;
            while x != 1 {
                x = x * g % p;
                k += 1;
            }
            k
        };
        let generator = (1..p).find(|&g| order_of(g) == p - 1).unwrap() as u8;
        let mut dlog = vec![0u32; p as usize];
        let mut x = 1u32;
        for k in 0..p - 1 {
            dlog[x as usize] = k;
            x = x * generator as u32 % p;
        }
        Some(PrimeField { p: p8, inv, dlog, generator })
    }

    pub fn p(&self) -> u32 {
        self.p as u32
    }

    pub fn generator(&self) -> u32 {
        self.generator as u32
    }

    /// Discrete log of a nonzero element with respect to [`Self::generator`].
    pub fn dlog(&self, x: u8) -> u32 {
        debug_assert!(x != 0);
        self.dlog[x as usize]
    }

    pub fn inv(&self, x: u8) -> u8 {
        self.inv[x as usize]
    }

    fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u16 + b as u16) % self.p as u16) as u8
    }

    fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u16 * b as u16) % self.p as u16) as u8
    }

    fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }
}

/// An `n x n` matrix, row-major, `n <= MAX_DIM`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Mat {
    n: u8,
    e: [u8; MAX_DIM * MAX_DIM],
}

impl Mat {
    pub fn identity(n: usize) -> Mat {
        let mut m = Mat { n: n as u8, e: [0; MAX_DIM * MAX_DIM] };
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[&[u8]]) -> Mat {
        let n = rows.len();
        let mut m = Mat { n: n as u8, e: [0; MAX_DIM * MAX_DIM] };
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), n);
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.e[i * MAX_DIM + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.e[i * MAX_DIM + j] = v;
    }

    /// Base-`p` code of the entries; a bijection onto `0..p^(n^2)`.
    pub fn encode(&self, p: u32) -> u32 {
        let n = self.dim();
        let mut code = 0u32;
        for i in (0..n).rev() {
            for j in (0..n).rev() {
                code = code * p + self.get(i, j) as u32;
            }
        }
        code
    }

    pub fn decode(mut code: u32, n: usize, p: u32) -> Mat {
        let mut m = Mat { n: n as u8, e: [0; MAX_DIM * MAX_DIM] };
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, (code % p) as u8);
                code /= p;
            }
        }
        m
    }

    pub fn mul(&self, rhs: &Mat, f: &PrimeField) -> Mat {
        let n = self.dim();
        let mut out = Mat { n: self.n, e: [0; MAX_DIM * MAX_DIM] };
        for i in 0..n {
            for j in 0..n {
                let mut acc = 0u16;
                for k in 0..n {
                    acc += self.get(i, k) as u16 * rhs.get(k, j) as u16;
                }
                out.set(i, j, (acc % f.p as u16) as u8);
            }
        }
        out
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self, f: &PrimeField) -> u8 {
        let n = self.dim();
        let mut a = *self;
        let mut det = 1u8;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| a.get(r, col) != 0) else {
                return 0;
            };
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                }
                det = f.neg(det);
            }
            let pv = a.get(col, col);
            det = f.mul(det, pv);
            let pinv = f.inv(pv);
            for r in col + 1..n {
                let factor = f.mul(a.get(r, col), pinv);
                if factor == 0 {
                    continue;
                }
                for j in col..n {
                    let v = f.add(a.get(r, j), f.neg(f.mul(factor, a.get(col, j))));
                    a.set(r, j, v);
                }
            }
        }
        det
    }

    /// Inverse by Gauss-Jordan; `None` when singular.
    pub fn inverse(&self, f: &PrimeField) -> Option<Mat> {
        let n = self.dim();
        let mut a = *self;
        let mut inv = Mat::identity(n);
        for col in 0..n {
            let pivot = (col..n).find(|&r| a.get(r, col) != 0)?;
            if pivot != col {
                for j in 0..n {
                    let (x, y) = (a.get(col, j), a.get(pivot, j));
                    a.set(col, j, y);
                    a.set(pivot, j, x);
                    let (x, y) = (inv.get(col, j), inv.get(pivot, j));
                    inv.set(col, j, y);
                    inv.set(pivot, j, x);
                }
            }
            let pinv = f.inv(a.get(col, col));
            for j in 0..n {
                a.set(col, j, f.mul(a.get(col, j), pinv));
                inv.set(col, j, f.mul(inv.get(col, j), pinv));
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a.get(r, col);
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let v = f.add(a.get(r, j), f.neg(f.mul(factor, a.get(col, j))));
                    a.set(r, j, v);
                    let v = f.add(inv.get(r, j), f.neg(f.mul(factor, inv.get(col, j))));
                    inv.set(r, j, v);
                }
            }
        }
        Some(inv)
    }

    /// `diag(self, 1)`, the block embedding `GL_n -> GL_{n+1}`.
    pub fn embed_upper_left(&self) -> Mat {
        let n = self.dim();
        let mut out = Mat::identity(n + 1);
        for i in 0..n {
            for j in 0..n {
                out.set(i, j, self.get(i, j));
            }
        }
        out
    }

    pub fn is_upper_triangular(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.get(i, j) == 0))
    }
}
