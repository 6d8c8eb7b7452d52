use std::fmt;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::FieldElement;

pub type Matrix = [[FieldElement; 4]; 4];

/// Roots of B2 with Π = {a, b}.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Root {
    A,
    B,
    AB,
    TwoAB,
    NegA,
    NegB,
    NegAB,
    NegTwoAB,
}

impl Root {
    pub const POSITIVE: [Root; 4] = [Root::A, Root::B, Root::AB, Root::TwoAB];
    pub const ALL: [Root; 8] = [
        Root::A,
        Root::B,
        Root::AB,
        Root::TwoAB,
        Root::NegA,
        Root::NegB,
        Root::NegAB,
        Root::NegTwoAB,
    ];

    fn positive(self) -> (Root, bool) {
        match self {
            Root::NegA => (Root::A, true),
            Root::NegB => (Root::B, true),
            Root::NegAB => (Root::AB, true),
            Root::NegTwoAB => (Root::TwoAB, true),
            r => (r, false),
        }
    }

    fn negate(self, neg: bool) -> Root {
        if !neg {
            return self;
        }
        match self {
            Root::A => Root::NegA,
            Root::B => Root::NegB,
            Root::AB => Root::NegAB,
            Root::TwoAB => Root::NegTwoAB,
            r => r,
        }
    }

    /// Image under the graph endomorphism, and whether the parameter is squared.
    pub fn alpha(self) -> (Root, bool) {
        let (r, neg) = self.positive();
        let (img, square) = match r {
            Root::A => (Root::B, true),
            Root::B => (Root::A, false),
            Root::AB => (Root::TwoAB, true),
            _ => (Root::AB, false),
        };
        (img.negate(neg), square)
    }

    pub fn name(self) -> &'static str {
        match self {
            Root::A => "xa",
            Root::B => "xb",
            Root::AB => "xab",
            Root::TwoAB => "x2ab",
            Root::NegA => "x-a",
            Root::NegB => "x-b",
            Root::NegAB => "x-ab",
            Root::NegTwoAB => "x-2ab",
        }
    }
}

/// A generator token of a stored word.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Token {
    X(Root, FieldElement),
    H(FieldElement, FieldElement),
    Na,
    Nb,
}

impl Token {
    pub fn matrix(self, m: u32) -> Matrix {
        match self {
            Token::X(r, t) => x_matrix(r, t),
            Token::H(z1, z2) => h_matrix(z1, z2),
            Token::Na => perm_matrix(m, [1, 0, 3, 2]),
            Token::Nb => perm_matrix(m, [0, 2, 1, 3]),
        }
    }

    /// The generator image table of α.
    pub fn alpha(self) -> Token {
        match self {
            Token::X(r, t) => {
                let (img, square) = r.alpha();
                Token::X(img, if square { t.square() } else { t })
            }
            Token::H(z1, z2) => {
                let inv = z2.inv().expect("torus parameter is nonzero");
                Token::H(z1 * z2, z1 * inv)
            }
            Token::Na => Token::Nb,
            Token::Nb => Token::Na,
        }
    }

    pub fn frobenius(self, k: u32) -> Token {
        match self {
            Token::X(r, t) => Token::X(r, t.frobenius(k)),
            Token::H(z1, z2) => Token::H(z1.frobenius(k), z2.frobenius(k)),
            t => t,
        }
    }
}

impl fmt::Display for Token {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Token::X(r, t) => write!(f, "{}({})", r.name(), t.bits()),
            Token::H(a, b) => write!(f, "h({},{})", a.bits(), b.bits()),
            Token::Na => write!(f, "na"),
            Token::Nb => write!(f, "nb"),
        }
    }
}

fn identity_matrix(m: u32) -> Matrix {
    let mut out = [[FieldElement::zero(m); 4]; 4];
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = FieldElement::one(m);
    }
    out
}

fn perm_matrix(m: u32, p: [usize; 4]) -> Matrix {
    let mut out = [[FieldElement::zero(m); 4]; 4];
    for (i, &j) in p.iter().enumerate() {
        out[i][j] = FieldElement::one(m);
    }
    out
}

fn x_matrix(r: Root, t: FieldElement) -> Matrix {
    let mut out = identity_matrix(t.degree());
    let (pos, neg) = r.positive();
    let cells: &[(usize, usize)] = match pos {
        Root::A => &[(0, 1), (2, 3)],
        Root::B => &[(1, 2)],
        Root::AB => &[(0, 2), (1, 3)],
        _ => &[(0, 3)],
    };
    for &(i, j) in cells {
        if neg {
            out[j][i] = t;
        } else {
            out[i][j] = t;
        }
    }
    out
}

fn h_matrix(z1: FieldElement, z2: FieldElement) -> Matrix {
    let mut out = identity_matrix(z1.degree());
    out[0][0] = z1;
    out[1][1] = z2;
    out[2][2] = z2.inv().expect("nonzero");
    out[3][3] = z1.inv().expect("nonzero");
    out
}

pub(crate) fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let m = a[0][0].degree();
    let mut out = [[FieldElement::zero(m); 4]; 4];
    for i in 0..4 {
        for k in 0..4 {
            let aik = a[i][k];
            if aik.is_zero() {
                continue;
            }
            for j in 0..4 {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

/// g^(-1) = J·ᵗg·J for symplectic g (J is its own inverse in characteristic 2).
fn symplectic_inverse(a: &Matrix) -> Matrix {
    let mut out = *a;
    for i in 0..4 {
        for j in 0..4 {
            out[i][j] = a[3 - j][3 - i];
        }
    }
    out
}

fn is_symplectic(a: &Matrix) -> bool {
    let m = a[0][0].degree();
    let prod = mat_mul(&symplectic_inverse(a), a);
    prod == identity_matrix(m)
}

const MINOR_PAIRS: [(usize, usize); 4] = [(0, 1), (0, 2), (1, 3), (2, 3)];

/// Matrix-level α from 2×2 minors on the isotropic-pair subquotient of Λ²V.
fn alpha_matrix(a: &Matrix) -> Matrix {
    let m = a[0][0].degree();
    let mut out = [[FieldElement::zero(m); 4]; 4];
    for (i, &(r1, r2)) in MINOR_PAIRS.iter().enumerate() {
        for (j, &(c1, c2)) in MINOR_PAIRS.iter().enumerate() {
            out[i][j] = a[r1][c1] * a[r2][c2] + a[r1][c2] * a[r2][c1];
        }
    }
    out
}

/// An element of Sp4 over GF(2^m), optionally remembering a generator word.
///
/// Equality and hashing only look at the matrix.
#[derive(Clone)]
pub struct GroupElement {
    mat: Matrix,
    word: Option<Vec<Token>>,
}

impl PartialEq for GroupElement {
    fn eq(&self, other: &Self) -> bool {
        self.mat == other.mat
    }
}

impl Eq for GroupElement {}

impl Hash for GroupElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.mat.hash(state);
    }
}

impl GroupElement {
    pub fn new(mat: Matrix) -> Result<Self> {
        let m = mat[0][0].degree();
        if mat.iter().flatten().any(|x| x.degree() != m) {
            return Err(Error::DegreeMismatch(m, m));
        }
        if !is_symplectic(&mat) {
            return Err(Error::NotSymplectic);
        }
        Ok(GroupElement { mat, word: None })
    }

    pub fn identity(m: u32) -> Self {
        GroupElement {
            mat: identity_matrix(m),
            word: Some(Vec::new()),
        }
    }

    pub fn gen(token: Token, m: u32) -> Result<Self> {
        if let Token::H(z1, z2) = token {
            if z1.is_zero() || z2.is_zero() {
                return Err(Error::ZeroTorusParameter);
            }
            if z1.degree() != z2.degree() {
                return Err(Error::DegreeMismatch(z1.degree(), z2.degree()));
            }
        }
        Ok(GroupElement {
            mat: token.matrix(m),
            word: Some(vec![token]),
        })
    }

    pub fn x(r: Root, t: FieldElement) -> Self {
        Self::gen(Token::X(r, t), t.degree()).expect("root elements are always valid")
    }

    pub fn h(z1: FieldElement, z2: FieldElement) -> Result<Self> {
        Self::gen(Token::H(z1, z2), z1.degree())
    }

    pub fn n_a(m: u32) -> Self {
        Self::gen(Token::Na, m).expect("valid")
    }

    pub fn n_b(m: u32) -> Self {
        Self::gen(Token::Nb, m).expect("valid")
    }

    /// Product of generator tokens.
    pub fn from_word(tokens: &[Token], m: u32) -> Result<Self> {
        tokens.iter().try_fold(Self::identity(m), |acc, &t| {
            Ok(acc.mul(&Self::gen(t, m)?))
        })
    }

    pub fn matrix(&self) -> &Matrix {
        &self.mat
    }

    pub fn word(&self) -> Option<&[Token]> {
        self.word.as_deref()
    }

    pub fn without_word(mut self) -> Self {
        self.word = None;
        self
    }

    pub fn degree(&self) -> u32 {
        self.mat[0][0].degree()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let word = match (&self.word, &other.word) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).copied().collect()),
            _ => None,
        };
        GroupElement {
            mat: mat_mul(&self.mat, &other.mat),
            word,
        }
    }

    pub fn inverse(&self) -> Self {
        GroupElement {
            mat: symplectic_inverse(&self.mat),
            word: None,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.mat == identity_matrix(self.degree())
    }

    pub fn pow(&self, mut k: u64) -> Self {
        let mut base = self.clone().without_word();
        let mut acc = Self::identity(self.degree()).without_word();
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            k >>= 1;
        }
        acc
    }

    pub fn order(&self) -> u64 {
        let mut g = self.clone().without_word();
        let mut k = 1;
        while !g.is_identity() {
            g = g.mul(self);
            k += 1;
        }
        k
    }

    pub fn conjugate_by(&self, x: &Self) -> Self {
        x.mul(self).mul(&x.inverse())
    }

    /// The graph endomorphism computed from the matrix.
    pub fn alpha(&self) -> Self {
        GroupElement {
            mat: alpha_matrix(&self.mat),
            word: self
                .word
                .as_ref()
                .map(|w| w.iter().map(|t| t.alpha()).collect()),
        }
    }

    /// α applied through the stored word, if there is one.
    pub fn alpha_by_word(&self) -> Option<Result<Self>> {
        let w: Vec<Token> = self.word.as_ref()?.iter().map(|t| t.alpha()).collect();
        Some(Self::from_word(&w, self.degree()))
    }

    /// Entrywise 2^k-th power.
    pub fn frobenius(&self, k: u32) -> Self {
        let mut mat = self.mat;
        for x in mat.iter_mut().flatten() {
            *x = x.frobenius(k);
        }
        GroupElement {
            mat,
            word: self
                .word
                .as_ref()
                .map(|w| w.iter().map(|t| t.frobenius(k)).collect()),
        }
    }

    /// F = F_θ ∘ α with θ = 2^n. On GF(q)-points this is σ.
    pub fn twisted_frobenius(&self, n: u32) -> Self {
        self.alpha().frobenius(n)
    }

    pub fn sigma(&self, n: u32) -> Self {
        self.twisted_frobenius(n)
    }

    pub fn is_upper_triangular(&self) -> bool {
        (0..4).all(|i| (0..i).all(|j| self.mat[i][j].is_zero()))
    }

    pub fn is_unipotent_upper(&self) -> bool {
        self.is_upper_triangular() && (0..4).all(|i| self.mat[i][i].is_one())
    }

    /// Packs the matrix into 128 bits; requires m ≤ 8.
    pub fn key(&self) -> u128 {
        debug_assert!(self.degree() <= 8);
        self.mat
            .iter()
            .flatten()
            .fold(0u128, |acc, x| (acc << 8) | x.bits() as u128)
    }

    pub fn from_key(key: u128, m: u32) -> Self {
        let mut mat = [[FieldElement::zero(m); 4]; 4];
        for (idx, x) in mat.iter_mut().flatten().enumerate() {
            *x = FieldElement::new(m, ((key >> (8 * (15 - idx))) & 0xff) as u64);
        }
        GroupElement { mat, word: None }
    }
}

impl fmt::Debug for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.mat.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.bits().to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

#[derive(Serialize)]
struct WireOut<'a> {
    matrix: Vec<&'a FieldElement>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct WireIn {
    matrix: Vec<FieldElement>,
}

impl Serialize for GroupElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireOut {
            matrix: self.mat.iter().flatten().collect(),
            word: self
                .word
                .as_ref()
                .map(|w| w.iter().map(|t| t.to_string()).collect()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GroupElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let w = WireIn::deserialize(d)?;
        if w.matrix.len() != 16 {
            return Err(D::Error::custom("expected 16 entries"));
        }
        let mut mat = [[w.matrix[0]; 4]; 4];
        for (idx, x) in w.matrix.into_iter().enumerate() {
            mat[idx / 4][idx % 4] = x;
        }
        GroupElement::new(mat).map_err(D::Error::custom)
    }
}
