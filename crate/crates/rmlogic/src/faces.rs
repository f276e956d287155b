//! Nonempty faces of the n-cube.
//!
//! A face is stored as a word over `{0, h, 1}`: coordinate `i` is `0` or
//! `1` where the face is pinned, `h` where it is free. The set-pair view
//! `(A0, A1)` of pinned coordinates is derived from the word, and the
//! original set-theoretic definitions of the face operations are exercised
//! against the pointwise ones in the tests and the selftest.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::trit::Trit;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FaceError {
    EmptyWord,
    BadChar { pos: usize, ch: char },
    DimensionMismatch { left: usize, right: usize },
    /// `antipodal_in` requires the second argument to be a subface.
    NotSubface,
    /// The pair clashes at this coordinate (1-based).
    IncompatiblePair { coord: usize },
    BadSets(&'static str),
    Internal(&'static str),
}

impl fmt::Display for FaceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FaceError::EmptyWord => write!(f, "a face needs at least one coordinate"),
            FaceError::BadChar { pos, ch } => {
                write!(f, "bad face character `{ch}` at position {pos}")
            }
            FaceError::DimensionMismatch { left, right } => {
                write!(f, "faces live in different cubes: n={left} vs n={right}")
            }
            FaceError::NotSubface => write!(f, "the reflected face must be a subface"),
            FaceError::IncompatiblePair { coord } => {
                write!(f, "faces clash at coordinate {coord}")
            }
            FaceError::BadSets(what) => write!(f, "bad coordinate sets: {what}"),
            FaceError::Internal(what) => write!(f, "internal invariant violated: {what}"),
        }
    }
}

/// A nonempty face of the n-cube, `n >= 1`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Face {
    word: Vec<Trit>,
}

/// A 0-dimensional face, as explicit 0/1 coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex {
    pub coords: Vec<bool>,
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", u8::from(*c))?;
        }
        write!(f, ")")
    }
}

impl Vertex {
    /// Edge distance from the origin: the number of 1-coordinates.
    pub fn distance_from_origin(&self) -> usize {
        self.coords.iter().filter(|c| **c).count()
    }
}

impl Face {
    pub fn from_trits(word: &[Trit]) -> Result<Face, FaceError> {
        if word.is_empty() {
            return Err(FaceError::EmptyWord);
        }
        Ok(Face {
            word: word.to_vec(),
        })
    }

    pub fn from_word(s: &str) -> Result<Face, FaceError> {
        let mut word = Vec::new();
        for (pos, ch) in s.chars().enumerate() {
            match Trit::from_symbol(ch) {
                Some(t) => word.push(t),
                None => return Err(FaceError::BadChar { pos, ch }),
            }
        }
        Face::from_trits(&word)
    }

    /// Reconstructs a face from its pinned coordinate sets (1-based).
    pub fn from_sets(n: usize, a0: &[usize], a1: &[usize]) -> Result<Face, FaceError> {
        if n == 0 {
            return Err(FaceError::EmptyWord);
        }
        let mut word = alloc::vec![Trit::Half; n];
        for &i in a0 {
            if i == 0 || i > n {
                return Err(FaceError::BadSets("index out of range"));
            }
            word[i - 1] = Trit::Zero;
        }
        for &i in a1 {
            if i == 0 || i > n {
                return Err(FaceError::BadSets("index out of range"));
            }
            if word[i - 1] == Trit::Zero {
                return Err(FaceError::BadSets("A0 and A1 must be disjoint"));
            }
            word[i - 1] = Trit::One;
        }
        Ok(Face { word })
    }

    /// The origin: the all-zero vertex.
    pub fn origin(n: usize) -> Result<Face, FaceError> {
        Face::from_trits(&alloc::vec![Trit::Zero; n])
    }

    /// The whole cube: the all-free word.
    pub fn whole(n: usize) -> Result<Face, FaceError> {
        Face::from_trits(&alloc::vec![Trit::Half; n])
    }

    /// The vertex `1 = dpar(whole, origin)`: all coordinates pinned to 1.
    pub fn all_ones(n: usize) -> Result<Face, FaceError> {
        Face::from_trits(&alloc::vec![Trit::One; n])
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn trits(&self) -> &[Trit] {
        &self.word
    }

    pub fn word_string(&self) -> String {
        self.word.iter().map(|t| t.symbol()).collect()
    }

    /// Coordinates pinned to 0, 1-based, sorted.
    pub fn a0(&self) -> Vec<usize> {
        self.pinned(Trit::Zero)
    }

    /// Coordinates pinned to 1, 1-based, sorted.
    pub fn a1(&self) -> Vec<usize> {
        self.pinned(Trit::One)
    }

    fn pinned(&self, value: Trit) -> Vec<usize> {
        self.word
            .iter()
            .enumerate()
            .filter(|(_, t)| **t == value)
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// Number of free coordinates: the dimension of the face.
    pub fn dimension(&self) -> usize {
        self.word.iter().filter(|t| **t == Trit::Half).count()
    }

    pub fn is_vertex(&self) -> bool {
        self.dimension() == 0
    }

    fn same_cube(&self, other: &Face) -> Result<(), FaceError> {
        if self.n() != other.n() {
            return Err(FaceError::DimensionMismatch {
                left: self.n(),
                right: other.n(),
            });
        }
        Ok(())
    }

    fn pointwise(&self, other: &Face, f: impl Fn(Trit, Trit) -> Trit) -> Result<Face, FaceError> {
        self.same_cube(other)?;
        Ok(Face {
            word: self
                .word
                .iter()
                .zip(&other.word)
                .map(|(a, b)| f(*a, *b))
                .collect(),
        })
    }

    /// The smallest face containing both arguments.
    pub fn join(&self, other: &Face) -> Result<Face, FaceError> {
        self.pointwise(other, Trit::join)
    }

    /// Intersection of the two faces, `None` when they are disjoint.
    pub fn intersect(&self, other: &Face) -> Result<Option<Face>, FaceError> {
        self.same_cube(other)?;
        let mut word = Vec::with_capacity(self.n());
        for (a, b) in self.word.iter().zip(&other.word) {
            match a.meet_partial(*b) {
                Some(t) => word.push(t),
                None => return Ok(None),
            }
        }
        Ok(Some(Face { word }))
    }

    /// The antipodal of `sub` in `self`: the reflection of `sub` through
    /// the center of `self`, by the set formula
    /// `(B0 + (A1 - B1), B1 + (A0 - B0))`. Requires `sub` to be a subface.
    pub fn antipodal_in(&self, sub: &Face) -> Result<Face, FaceError> {
        self.same_cube(sub)?;
        if !sub.is_subface(self)? {
            return Err(FaceError::NotSubface);
        }
        let n = self.n();
        let (b0, b1) = (self.a0(), self.a1());
        let (a0, a1) = (sub.a0(), sub.a1());
        let diff = |xs: &[usize], ys: &[usize]| -> Vec<usize> {
            xs.iter().filter(|x| !ys.contains(x)).copied().collect()
        };
        let mut r0 = b0.clone();
        r0.extend(diff(&a1, &b1));
        let mut r1 = b1;
        r1.extend(diff(&a0, &b0));
        Face::from_sets(n, &r0, &r1)
    }

    /// The total antipodal operation: pointwise `dpar`, which equals
    /// the antipodal of `other` in `self.join(other)`.
    pub fn dpar(&self, other: &Face) -> Result<Face, FaceError> {
        self.pointwise(other, Trit::dpar)
    }

    /// Lattice meet: the intersection of the three faces
    /// `origin.join(x)`, `origin.join(y)`, `x.join(y)`. The chain of
    /// partial intersections is checked to be defined and to agree with
    /// the pointwise minimum.
    pub fn wedge(&self, other: &Face) -> Result<Face, FaceError> {
        self.same_cube(other)?;
        let origin = Face::origin(self.n())?;
        let first = origin.join(self)?;
        let second = origin.join(other)?;
        let third = self.join(other)?;
        let partial = first
            .intersect(&second)?
            .ok_or(FaceError::Internal("wedge intersection undefined"))?
            .intersect(&third)?
            .ok_or(FaceError::Internal("wedge intersection undefined"))?;
        let direct = self.pointwise(other, Trit::meet)?;
        if partial != direct {
            return Err(FaceError::Internal(
                "wedge chain disagrees with the pointwise minimum",
            ));
        }
        Ok(partial)
    }

    /// The closed form of the partial intersection for compatible faces:
    /// `(1/2 & N(a & !a) & N(b & !b)) | !N(!a & !b)`, evaluated pointwise.
    pub fn cap_curly(&self, other: &Face) -> Result<Face, FaceError> {
        self.same_cube(other)?;
        if let Some(coord) = self.clash_coord(other) {
            return Err(FaceError::IncompatiblePair { coord });
        }
        self.pointwise(other, |a, b| {
            let first = Trit::Half
                .meet(a.meet(a.neg()).nabla())
                .meet(b.meet(b.neg()).nabla());
            let second = a.neg().meet(b.neg()).nabla().neg();
            first.vee(second)
        })
    }

    fn clash_coord(&self, other: &Face) -> Option<usize> {
        self.word
            .iter()
            .zip(&other.word)
            .position(|(a, b)| a.meet_partial(*b).is_none())
            .map(|i| i + 1)
    }

    /// Inclusion via join absorption: `a` is a subface of `b` iff
    /// `a.join(b) == b`.
    pub fn is_subface(&self, other: &Face) -> Result<bool, FaceError> {
        Ok(&self.join(other)? == other)
    }

    /// The sharpening order, pointwise: at every coordinate,
    /// `a <= b <= !b` or `a >= b >= !b` under the numeric reading.
    pub fn sharper(&self, other: &Face) -> Result<bool, FaceError> {
        self.same_cube(other)?;
        Ok(self
            .word
            .iter()
            .zip(&other.word)
            .all(|(a, b)| a.sharper(*b)))
    }

    /// Compatibility: some face is below both. Equivalent to the absence
    /// of a `{0,1}` clash coordinate, which is how it is decided; the
    /// existential reading is the brute-force oracle in the tests.
    pub fn compatible(&self, other: &Face) -> Result<bool, FaceError> {
        self.same_cube(other)?;
        Ok(self.clash_coord(other).is_none())
    }

    /// The vertex of this face farthest from the origin, computed as
    /// `dpar(self, origin)`.
    pub fn farthest_vertex(&self) -> Vertex {
        Vertex {
            coords: self.word.iter().map(|t| t.dpar(Trit::Zero) == Trit::One).collect(),
        }
    }

    /// All vertices of the face: every 0/1 completion of its free
    /// coordinates.
    pub fn vertices(&self) -> Vec<Vertex> {
        let free: Vec<usize> = self
            .word
            .iter()
            .enumerate()
            .filter(|(_, t)| **t == Trit::Half)
            .map(|(i, _)| i)
            .collect();
        let mut out = Vec::with_capacity(1 << free.len());
        for mask in 0..(1usize << free.len()) {
            let mut coords: Vec<bool> = self.word.iter().map(|t| *t == Trit::One).collect();
            for (bit, &i) in free.iter().enumerate() {
                coords[i] = mask >> bit & 1 == 1;
            }
            out.push(Vertex { coords });
        }
        out.sort();
        out
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.word_string())
    }
}

/// All `3^n` faces of the n-cube in word order.
pub fn enumerate_faces(n: usize) -> Vec<Face> {
    let total = 3usize.pow(n as u32);
    let mut out = Vec::with_capacity(total);
    for idx in 0..total {
        let mut word = alloc::vec![Trit::Zero; n];
        let mut rest = idx;
        for i in (0..n).rev() {
            word[i] = Trit::from_index(rest % 3).unwrap();
            rest /= 3;
        }
        out.push(Face { word });
    }
    out
}
