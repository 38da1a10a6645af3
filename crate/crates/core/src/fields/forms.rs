use num_integer::Integer;

/// Positive definite binary quadratic form `a x^2 + b xy + c y^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl BinaryForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        BinaryForm { a, b, c }
    }

    pub fn disc(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    pub fn eval(&self, x: i64, y: i64) -> i64 {
        self.a * x * x + self.b * x * y + self.c * y * y
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).gcd(&self.c) == 1
    }

    pub fn is_reduced(&self) -> bool {
        let BinaryForm { a, b, c } = *self;
        b.abs() <= a && a <= c && (b >= 0 || (b.abs() != a && a != c))
    }

    /// Principal form of discriminant `d`.
    pub fn principal(d: i64) -> Self {
        let b = d.rem_euclid(2);
        BinaryForm::new(1, b, (b * b - d) / 4).reduce()
    }

    pub fn inverse(&self) -> Self {
        BinaryForm::new(self.a, -self.b, self.c).reduce()
    }

    pub fn reduce(&self) -> Self {
        let BinaryForm { mut a, mut b, mut c } = *self;
        loop {
            if b > a || b <= -a {
                // normalize b into (-a, a]
                let two_a = 2 * a;
                let mut r = (b + a).rem_euclid(two_a) - a;
                if r == -a {
                    r = a;
                }
                let k = (r - b) / two_a;
                c += k * k * a + k * b;
                b = r;
            }
            if a > c {
                std::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            if a == c && b < 0 {
                b = -b;
            }
            return BinaryForm { a, b, c };
        }
    }

    /// Gauss composition followed by reduction.
    pub fn compose(&self, other: &BinaryForm) -> BinaryForm {
        let (f1, f2) = if self.a > other.a { (other, self) } else { (self, other) };
        let (a1, b1, _) = (f1.a, f1.b, f1.c);
        let (a2, b2, c2) = (f2.a, f2.b, f2.c);
        let d_disc = f1.disc();
        let s = (b1 + b2) / 2;
        let n = b2 - s;
        let (y1, d) = if a2 % a1 == 0 {
            (0, a1)
        } else {
            let e = a2.extended_gcd(&a1);
            (e.x, e.gcd)
        };
        let (x2, y2, d1) = if s % d == 0 {
            (0, -1, d)
        } else {
            let e = s.extended_gcd(&d);
            (e.x, -e.y, e.gcd)
        };
        let v1 = a1 / d1;
        let v2 = a2 / d1;
        let r = (y1 as i128 * y2 as i128 * n as i128 - x2 as i128 * c2 as i128).rem_euclid(v1 as i128) as i64;
        let b3 = b2 + 2 * v2 * r;
        let a3 = v1 * v2;
        let c3 = (b3 * b3 - d_disc) / (4 * a3);
        BinaryForm::new(a3, b3, c3).reduce()
    }
}

/// Reduced primitive forms of a negative discriminant, in increasing order.
pub fn reduced_forms(d: i64) -> Vec<BinaryForm> {
    assert!(d < 0 && d.rem_euclid(4) <= 1);
    let mut out = Vec::new();
    let mut a = 1i64;
    while 3 * a * a <= -d {
        for b in -a + 1..=a {
            let num = b * b - d;
            if num % (4 * a) != 0 {
                continue;
            }
            let c = num / (4 * a);
            let f = BinaryForm::new(a, b, c);
            if c >= a && f.is_reduced() && f.is_primitive() {
                out.push(f);
            }
        }
        a += 1;
    }
    out.sort();
    out
}

/// Form class group of a negative discriminant with its multiplication table.
#[derive(Clone, Debug)]
pub struct ClassGroup {
    pub disc: i64,
    pub forms: Vec<BinaryForm>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl ClassGroup {
    pub fn new(d: i64) -> Self {
        let forms = reduced_forms(d);
        let idx = |f: &BinaryForm| forms.iter().position(|g| g == f).expect("composition closed");
        let table: Vec<Vec<usize>> = forms.iter().map(|f| forms.iter().map(|g| idx(&f.compose(g))).collect()).collect();
        let identity = idx(&BinaryForm::principal(d));
        ClassGroup { disc: d, forms, table, identity }
    }

    pub fn order(&self) -> usize {
        self.forms.len()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i][j]
    }

    pub fn inverse(&self, i: usize) -> usize {
        (0..self.order()).find(|&j| self.table[i][j] == self.identity).unwrap()
    }

    pub fn pow(&self, i: usize, k: usize) -> usize {
        (0..k).fold(self.identity, |acc, _| self.mul(acc, i))
    }

    pub fn element_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    pub fn index_of(&self, f: &BinaryForm) -> Option<usize> {
        let r = f.reduce();
        self.forms.iter().position(|g| *g == r)
    }

    /// Class of the prime ideal above `p` that contains `(-b + sqrt(D))/2` for `b ≡ root (mod p)`,
    /// where `root` is the residue of the chosen square root of `D`.
    pub fn prime_class(&self, p: i64, root: i64) -> usize {
        let d = self.disc;
        let s = root.rem_euclid(p);
        let b = if (s - d).rem_euclid(2) == 0 { s } else { s - p };
        let c = (b * b - d) / (4 * p);
        self.index_of(&BinaryForm::new(p, b, c)).unwrap()
    }

    /// Smallest generating set, greedy over elements of decreasing order.
    pub fn generators(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = vec![self.identity];
        let mut cand: Vec<usize> = (0..self.order()).collect();
        cand.sort_by_key(|&i| std::cmp::Reverse(self.element_order(i)));
        for g in cand {
            if span.contains(&g) {
                continue;
            }
            gens.push(g);
            let mut frontier = span.clone();
            while let Some(x) = frontier.pop() {
                for &h in gens.iter() {
                    let y = self.mul(x, h);
                    if !span.contains(&y) {
                        span.push(y);
                        frontier.push(y);
                    }
                }
            }
            if span.len() == self.order() {
                break;
            }
        }
        gens
    }
}

/// Class number of a negative discriminant by counting reduced forms.
pub fn class_number_forms(d: i64) -> usize {
    reduced_forms(d).len()
}
