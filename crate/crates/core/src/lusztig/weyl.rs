//! The Weyl group W(B2) of order 8, the graph automorphism F swapping the
//! simple reflections, and the three F-stable characters with their extensions
//! to W ⋊ ⟨F⟩.

use serde::Serialize;

use crate::cyclotomic::CycNum;
use crate::error::{Error, Result};

/// 2x2 integer matrix in the basis of simple roots (a long, b short).
pub type IntMat = [[i64; 2]; 2];

const ID: IntMat = [[1, 0], [0, 1]];
/// s_a: a ↦ -a, b ↦ a + b (columns are images).
const S_A: IntMat = [[-1, 1], [0, 1]];
/// s_b: a ↦ a + 2b, b ↦ -b.
const S_B: IntMat = [[1, 0], [2, -1]];

fn imul(x: &IntMat, y: &IntMat) -> IntMat {
    let mut z = [[0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
        }
    }
    z
}

type CycMat = Vec<Vec<CycNum>>;

fn to_cyc(x: &IntMat) -> CycMat {
    x.iter()
        .map(|r| r.iter().map(|&v| CycNum::from_int(v)).collect())
        .collect()
}

fn cmul(x: &CycMat, y: &CycMat) -> CycMat {
    let k = x.len();
    (0..k)
        .map(|i| {
            (0..k)
                .map(|j| (0..k).map(|t| &x[i][t] * &y[t][j]).sum())
                .collect()
        })
        .collect()
}

fn trace(x: &CycMat) -> CycNum {
    (0..x.len()).map(|i| x[i][i].clone()).sum()
}

/// Isometry of the root plane with a ↦ √2·b, b ↦ a/√2.
fn tau() -> CycMat {
    let r2 = CycNum::sqrt2();
    let half = num_rational::BigRational::new(1.into(), 2.into());
    vec![
        vec![CycNum::zero(), r2.scale(&half)],
        vec![r2, CycNum::zero()],
    ]
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylElement {
    /// Shortest word in the letters 'a', 'b'.
    pub word: String,
    pub matrix: IntMat,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FClass {
    pub label: String,
    pub rep: usize,
    pub size: usize,
}

/// ρ on W and ρ̃ on the coset W·F, both indexed like `WeylData::elements`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ExtendedCharacter {
    pub name: String,
    pub on_w: Vec<CycNum>,
    pub on_coset: Vec<CycNum>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeylData {
    pub elements: Vec<WeylElement>,
    /// Index of F(w) for each w.
    pub frobenius: Vec<usize>,
    pub f_classes: Vec<FClass>,
    pub class_of: Vec<usize>,
    pub characters: Vec<ExtendedCharacter>,
}

fn word_matrix(word: &str) -> IntMat {
    word.chars().fold(ID, |acc, c| imul(&acc, if c == 'a' { &S_A } else { &S_B }))
}

fn swap_letters(word: &str) -> String {
    word.chars().map(|c| if c == 'a' { 'b' } else { 'a' }).collect()
}

impl WeylData {
    pub fn new() -> Result<Self> {
        // breadth first, so each element keeps a shortest word
        let mut elements = vec![WeylElement { word: String::new(), matrix: ID }];
        let mut i = 0;
        while i < elements.len() {
            for c in ["a", "b"] {
                let word = format!("{}{c}", elements[i].word);
                let matrix = word_matrix(&word);
                if !elements.iter().any(|e| e.matrix == matrix) {
                    elements.push(WeylElement { word, matrix });
                }
            }
            i += 1;
        }
        if elements.len() != 8 {
            return Err(Error::InvalidParameter(format!("|W| = {}", elements.len())));
        }
        let index = |m: &IntMat| elements.iter().position(|e| e.matrix == *m).expect("closed");
        let frobenius: Vec<usize> = elements
            .iter()
            .map(|e| index(&word_matrix(&swap_letters(&e.word))))
            .collect();
        let inverse: Vec<usize> = elements
            .iter()
            .map(|e| {
                let rev: String = e.word.chars().rev().collect();
                index(&word_matrix(&rev))
            })
            .collect();

        // F-classes: orbits of w ↦ v·w·F(v)^(-1)
        let mut class_of = vec![usize::MAX; 8];
        let mut f_classes = Vec::new();
        for (rep_word, label) in [("", "1"), ("a", "w_a"), ("aba", "w_a w_b w_a")] {
            let rep = index(&word_matrix(rep_word));
            if class_of[rep] != usize::MAX {
                return Err(Error::InvalidParameter(format!("{label} repeats an F-class")));
            }
            let k = f_classes.len();
            let mut size = 0;
            for v in 0..8 {
                let y = imul(
                    &imul(&elements[v].matrix, &elements[rep].matrix),
                    &elements[inverse[frobenius[v]]].matrix,
                );
                let y = index(&y);
                if class_of[y] == usize::MAX {
                    class_of[y] = k;
                    size += 1;
                }
            }
            f_classes.push(FClass { label: label.into(), rep, size });
        }
        if class_of.contains(&usize::MAX) {
            return Err(Error::InvalidParameter("F-classes do not cover W".into()));
        }

        let det = |m: &IntMat| m[0][0] * m[1][1] - m[0][1] * m[1][0];
        let t = tau();
        let characters = vec![
            ExtendedCharacter {
                name: "rho1".into(),
                on_w: vec![CycNum::one(); 8],
                on_coset: vec![CycNum::one(); 8],
            },
            ExtendedCharacter {
                name: "rho2".into(),
                on_w: elements.iter().map(|e| CycNum::from_int(det(&e.matrix))).collect(),
                on_coset: elements.iter().map(|e| CycNum::from_int(det(&e.matrix))).collect(),
            },
            // F acts on the reflection representation by -τ
            ExtendedCharacter {
                name: "rho3".into(),
                on_w: elements.iter().map(|e| trace(&to_cyc(&e.matrix))).collect(),
                on_coset: elements
                    .iter()
                    .map(|e| -trace(&cmul(&to_cyc(&e.matrix), &t)))
                    .collect(),
            },
        ];
        let data = WeylData { elements, frobenius, f_classes, class_of, characters };
        data.check_extensions()?;
        Ok(data)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// ρ̃(w·F) at the representative of each F-class.
    pub fn class_values(&self, i: usize) -> Vec<CycNum> {
        self.f_classes
            .iter()
            .map(|c| self.characters[i].on_coset[c.rep].clone())
            .collect()
    }

    /// Checks that each ρ is irreducible and F-stable, that ρ̃ is constant on
    /// F-classes, and that τ defines an action of W ⋊ ⟨F⟩ on the reflection
    /// representation.
    pub fn check_extensions(&self) -> Result<()> {
        let bad = |what: String| Err(Error::InvalidParameter(what));
        let t = tau();
        let id = to_cyc(&ID);
        if cmul(&t, &t) != id {
            return bad("τ² ≠ 1".into());
        }
        for (w, e) in self.elements.iter().enumerate() {
            let fw = to_cyc(&self.elements[self.frobenius[w]].matrix);
            if cmul(&cmul(&t, &to_cyc(&e.matrix)), &t) != fw {
                return bad(format!("τ·{}·τ ≠ F({})", e.word, e.word));
            }
        }
        for ch in &self.characters {
            let norm: CycNum = ch.on_w.iter().map(|v| v * &v.conj()).sum();
            if norm != CycNum::from_int(self.order() as i64) {
                return bad(format!("{} is not irreducible", ch.name));
            }
            for w in 0..self.order() {
                if ch.on_w[self.frobenius[w]] != ch.on_w[w] {
                    return bad(format!("{} is not F-stable", ch.name));
                }
                let rep = self.f_classes[self.class_of[w]].rep;
                if ch.on_coset[w] != ch.on_coset[rep] {
                    return bad(format!("{} is not an F-class function", ch.name));
                }
            }
        }
        Ok(())
    }
}
