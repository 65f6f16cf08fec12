//! Finite groups as dense Cayley tables, C2-gradings and U(1)-characters.
//!
//! Elements are indices `0..n`. Every constructor validates the full set of
//! group axioms exhaustively; the groups in play are small enough that tables
//! keep each identity checkable.

use crate::phase::Phase;
use std::fmt;
use std::sync::Arc;
use thiserror::Error;

pub const DEFAULT_ORDER_CAP: usize = 10_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("multiplication is not associative at ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("Cayley table is not square or has out-of-range entries")]
    MalformedTable,
    #[error("row or column {0} of the Cayley table is not a permutation")]
    NotAPermutation(usize),
    #[error("grading is not a homomorphism: sign({0}·{1}) ≠ sign({0})·sign({1})")]
    NotHomomorphism(usize, usize),
    #[error("grading is not surjective: no element of sign -1")]
    NotSurjective,
    #[error("grading table has {got} entries for a group of order {want}")]
    GradingSizeMismatch { got: usize, want: usize },
    #[error("generator closure exceeded the order cap {0}")]
    ClosureTooLarge(usize),
    #[error("generator is not a permutation of 0..{0}")]
    BadGenerator(usize),
    #[error("unknown preset {0:?}")]
    UnknownPreset(String),
    #[error("bad preset parameter: {0}")]
    BadParameter(String),
    #[error("character is not a homomorphism at ({0}, {1})")]
    CharacterNotHomomorphism(usize, usize),
}

/// A finite group on elements `0..n` given by its Cayley table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    n: usize,
    table: Vec<usize>, // row-major: table[a*n + b] = a·b
    identity: usize,
    inverse: Vec<usize>,
    names: Vec<String>,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup(order {})", self.n)
    }
}

impl FiniteGroup {
    pub fn from_cayley(table: &[Vec<usize>]) -> Result<Self, GroupError> {
        let n = table.len();
        if n == 0 {
            return Err(GroupError::MalformedTable);
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in table {
            if row.len() != n || row.iter().any(|&x| x >= n) {
                return Err(GroupError::MalformedTable);
            }
            flat.extend_from_slice(row);
        }
        Self::from_flat_table(n, flat, None)
    }

    fn from_flat_table(
        n: usize,
        table: Vec<usize>,
        names: Option<Vec<String>>,
    ) -> Result<Self, GroupError> {
        // Latin square check.
        for i in 0..n {
            let mut row_seen = vec![false; n];
            let mut col_seen = vec![false; n];
            for j in 0..n {
                row_seen[table[i * n + j]] = true;
                col_seen[table[j * n + i]] = true;
            }
            if row_seen.iter().any(|s| !s) || col_seen.iter().any(|s| !s) {
                return Err(GroupError::NotAPermutation(i));
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| table[e * n + a] == a && table[a * n + e] == a))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = vec![usize::MAX; n];
        for a in 0..n {
            inverse[a] = (0..n)
                .find(|&b| table[a * n + b] == identity && table[b * n + a] == identity)
                .ok_or(GroupError::NoInverse(a))?;
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a * n + b] * n + c] != table[a * n + table[b * n + c]] {
                        return Err(GroupError::NotAssociative(a, b, c));
                    }
                }
            }
        }
        let names = names.unwrap_or_else(|| (0..n).map(|i| format!("g{i}")).collect());
        Ok(FiniteGroup {
            n,
            table,
            identity,
            inverse,
            names,
        })
    }

    /// Closure of a set of permutations of `0..m` under composition.
    ///
    /// Element 0 is the identity; the remaining elements are enumerated
    /// breadth-first over generator words, which fixes a deterministic
    /// ordering. Products are `a·b = a∘b` (apply `b` first).
    pub fn from_permutations(generators: &[Vec<usize>], cap: usize) -> Result<Self, GroupError> {
        let m = generators.first().map_or(1, |g| g.len());
        for g in generators {
            let mut seen = vec![false; m];
            if g.len() != m || g.iter().any(|&x| x >= m) {
                return Err(GroupError::BadGenerator(m));
            }
            for &x in g {
                seen[x] = true;
            }
            if seen.iter().any(|s| !s) {
                return Err(GroupError::BadGenerator(m));
            }
        }
        let id: Vec<usize> = (0..m).collect();
        let mut elems: Vec<Vec<usize>> = vec![id.clone()];
        let mut queue = std::collections::VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for gen in generators {
                let composed: Vec<usize> = (0..m).map(|x| elems[i][gen[x]]).collect();
                if !elems.contains(&composed) {
                    elems.push(composed);
                    if elems.len() > cap {
                        return Err(GroupError::ClosureTooLarge(cap));
                    }
                    queue.push_back(elems.len() - 1);
                }
            }
        }
        let n = elems.len();
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                let prod: Vec<usize> = (0..m).map(|x| elems[a][elems[b][x]]).collect();
                table[a * n + b] = elems
                    .iter()
                    .position(|e| *e == prod)
                    .expect("closure is closed");
            }
        }
        Self::from_flat_table(n, table, None)
    }

    pub fn trivial() -> Self {
        FiniteGroup {
            n: 1,
            table: vec![0],
            identity: 0,
            inverse: vec![0],
            names: vec!["e".into()],
        }
    }

    pub fn cyclic(n: usize) -> Self {
        assert!(n >= 1);
        let mut table = vec![0usize; n * n];
        for a in 0..n {
            for b in 0..n {
                table[a * n + b] = (a + b) % n;
            }
        }
        let names = (0..n)
            .map(|i| match i {
                0 => "e".to_string(),
                1 => "r".to_string(),
                _ => format!("r{i}"),
            })
            .collect();
        FiniteGroup {
            n,
            table,
            identity: 0,
            inverse: (0..n).map(|a| (n - a) % n).collect(),
            names,
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn id(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.n + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn conj(&self, h: usize, g: usize) -> usize {
        self.mul(self.mul(h, g), self.inv(h))
    }

    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn set_names(&mut self, names: Vec<String>) {
        assert_eq!(names.len(), self.n);
        self.names = names;
    }

    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut assigned = vec![false; self.n];
        let mut classes = Vec::new();
        for g in 0..self.n {
            if assigned[g] {
                continue;
            }
            let mut members: Vec<usize> = (0..self.n).map(|h| self.conj(h, g)).collect();
            members.sort_unstable();
            members.dedup();
            for &x in &members {
                assigned[x] = true;
            }
            classes.push(members);
        }
        classes
    }

    pub fn centralizer(&self, g: usize) -> Vec<usize> {
        (0..self.n)
            .filter(|&h| self.mul(h, g) == self.mul(g, h))
            .collect()
    }

    pub fn cayley_rows(&self) -> Vec<Vec<usize>> {
        (0..self.n)
            .map(|a| (0..self.n).map(|b| self.mul(a, b)).collect())
            .collect()
    }
}

/// A finite group Ĝ with a surjective grading π: Ĝ → {+1, −1} and its kernel G.
#[derive(Clone)]
pub struct GradedGroup {
    hat: FiniteGroup,
    grading: Vec<i8>,
    kernel: FiniteGroup,
    embed: Vec<usize>,            // kernel index -> hat index
    to_kernel: Vec<Option<usize>>, // hat index -> kernel index
    odd: Vec<usize>,              // hat indices of sign -1, ascending
}

impl fmt::Debug for GradedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GradedGroup(|Ĝ| = {}, |G| = {})",
            self.hat.order(),
            self.kernel.order()
        )
    }
}

impl GradedGroup {
    pub fn new(hat: FiniteGroup, grading: Vec<i8>) -> Result<Self, GroupError> {
        let n = hat.order();
        if grading.len() != n {
            return Err(GroupError::GradingSizeMismatch {
                got: grading.len(),
                want: n,
            });
        }
        if grading.iter().any(|&s| s != 1 && s != -1) {
            return Err(GroupError::BadParameter("grading signs must be ±1".into()));
        }
        for a in 0..n {
            for b in 0..n {
                if grading[hat.mul(a, b)] != grading[a] * grading[b] {
                    return Err(GroupError::NotHomomorphism(a, b));
                }
            }
        }
        if !grading.contains(&-1) {
            return Err(GroupError::NotSurjective);
        }
        let embed: Vec<usize> = (0..n).filter(|&w| grading[w] == 1).collect();
        let odd: Vec<usize> = (0..n).filter(|&w| grading[w] == -1).collect();
        let mut to_kernel = vec![None; n];
        for (i, &w) in embed.iter().enumerate() {
            to_kernel[w] = Some(i);
        }
        let k = embed.len();
        let mut ktable = vec![0usize; k * k];
        for a in 0..k {
            for b in 0..k {
                ktable[a * k + b] = to_kernel[hat.mul(embed[a], embed[b])]
                    .expect("kernel is closed under multiplication");
            }
        }
        let knames = embed.iter().map(|&w| hat.name(w).to_string()).collect();
        let mut kernel = FiniteGroup::from_flat_table(k, ktable, None)?;
        kernel.set_names(knames);
        Ok(GradedGroup {
            hat,
            grading,
            kernel,
            embed,
            to_kernel,
            odd,
        })
    }

    pub fn hat(&self) -> &FiniteGroup {
        &self.hat
    }

    pub fn kernel(&self) -> &FiniteGroup {
        &self.kernel
    }

    /// π(ω) ∈ {+1, −1} as an integer sign.
    pub fn sign(&self, w: usize) -> i8 {
        self.grading[w]
    }

    pub fn is_odd(&self, w: usize) -> bool {
        self.grading[w] == -1
    }

    pub fn odd_elements(&self) -> &[usize] {
        &self.odd
    }

    /// Hat index of a kernel element.
    pub fn embed(&self, g: usize) -> usize {
        self.embed[g]
    }

    /// Kernel index of a hat element of sign +1.
    pub fn to_kernel(&self, w: usize) -> Option<usize> {
        self.to_kernel[w]
    }

    pub fn grading(&self) -> &[i8] {
        &self.grading
    }

    /// ω g^{π(ω)} ω⁻¹ for a kernel element g, returned as a kernel index.
    pub fn real_conj(&self, w: usize, g: usize) -> usize {
        let hat = &self.hat;
        let gh = self.embed[g];
        let gh = if self.is_odd(w) { hat.inv(gh) } else { gh };
        let res = hat.mul(hat.mul(w, gh), hat.inv(w));
        self.to_kernel[res].expect("Real conjugation preserves the kernel")
    }
}

/// A U(1)-character of Ĝ with exact root-of-unity values.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UCharacter {
    values: Vec<Phase>,
}

impl UCharacter {
    pub fn new(group: &GradedGroup, values: Vec<Phase>) -> Result<Self, GroupError> {
        let hat = group.hat();
        if values.len() != hat.order() {
            return Err(GroupError::BadParameter(format!(
                "character has {} values for a group of order {}",
                values.len(),
                hat.order()
            )));
        }
        for a in hat.elements() {
            for b in hat.elements() {
                if values[hat.mul(a, b)] != values[a].mul(values[b]) {
                    return Err(GroupError::CharacterNotHomomorphism(a, b));
                }
            }
        }
        Ok(UCharacter { values })
    }

    pub fn trivial(group: &GradedGroup) -> Self {
        UCharacter {
            values: vec![Phase::one(); group.hat().order()],
        }
    }

    /// λ = π, i.e. −1 on odd elements.
    pub fn pi(group: &GradedGroup) -> Self {
        UCharacter {
            values: group
                .grading()
                .iter()
                .map(|&s| if s == 1 { Phase::one() } else { Phase::minus_one() })
                .collect(),
        }
    }

    pub fn eval(&self, w: usize) -> Phase {
        self.values[w]
    }

    pub fn values(&self) -> &[Phase] {
        &self.values
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(Phase::is_one)
    }
}

/// Base group parameter for the `product_with_C2` preset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseGroup {
    Cyclic(usize),
    S3,
    A4,
}

impl BaseGroup {
    pub fn parse(s: &str) -> Result<Self, GroupError> {
        let t = s.trim();
        if let Some(rest) = t.strip_prefix('C').or_else(|| t.strip_prefix('c')) {
            let n: usize = rest
                .parse()
                .map_err(|_| GroupError::BadParameter(format!("bad base group {s:?}")))?;
            if n == 0 {
                return Err(GroupError::BadParameter("C0 is not a group".into()));
            }
            return Ok(BaseGroup::Cyclic(n));
        }
        match t.to_ascii_uppercase().as_str() {
            "S3" => Ok(BaseGroup::S3),
            "A4" => Ok(BaseGroup::A4),
            _ => Err(GroupError::BadParameter(format!(
                "unknown base group {s:?} (expected Cn, S3 or A4)"
            ))),
        }
    }

    pub fn build(&self) -> FiniteGroup {
        match self {
            BaseGroup::Cyclic(n) => FiniteGroup::cyclic(*n),
            BaseGroup::S3 => {
                FiniteGroup::from_permutations(&[vec![1, 2, 0], vec![1, 0, 2]], DEFAULT_ORDER_CAP)
                    .expect("S3 generators close")
            }
            BaseGroup::A4 => FiniteGroup::from_permutations(
                &[vec![1, 2, 0, 3], vec![1, 0, 3, 2]],
                DEFAULT_ORDER_CAP,
            )
            .expect("A4 generators close"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Preset {
    ProductWithC2(BaseGroup),
    CyclicDouble(usize),
    Dihedral(usize),
    Quaternion,
    S4OverA4,
}

impl Preset {
    /// Parses a CLI-style preset name with its numeric / base parameters.
    pub fn parse(name: &str, n: Option<usize>, base: Option<&str>) -> Result<Self, GroupError> {
        match name {
            "product_with_C2" => {
                let base = match (base, n) {
                    (Some(b), _) => BaseGroup::parse(b)?,
                    (None, Some(n)) => BaseGroup::Cyclic(n),
                    (None, None) => {
                        return Err(GroupError::BadParameter(
                            "product_with_C2 needs --base or --n".into(),
                        ))
                    }
                };
                Ok(Preset::ProductWithC2(base))
            }
            "cyclic_double" => Ok(Preset::CyclicDouble(n.ok_or_else(|| {
                GroupError::BadParameter("cyclic_double needs --n".into())
            })?)),
            "dihedral" => Ok(Preset::Dihedral(n.ok_or_else(|| {
                GroupError::BadParameter("dihedral needs --n".into())
            })?)),
            "quaternion" => Ok(Preset::Quaternion),
            "S4_over_A4" => Ok(Preset::S4OverA4),
            other => Err(GroupError::UnknownPreset(other.to_string())),
        }
    }
}

/// A built preset: the graded group plus the canonical character options and
/// bookkeeping used to label irreducibles in the reference tables.
#[derive(Clone, Debug)]
pub struct PresetData {
    pub name: String,
    pub graded: Arc<GradedGroup>,
    pub lambda_trivial: UCharacter,
    pub lambda_pi: UCharacter,
    /// Kernel index of a distinguished generator when the kernel is cyclic.
    pub kernel_generator: Option<usize>,
    /// Set when the preset parameters are legal but degenerate (e.g. odd n
    /// for `cyclic_double`, where Ĝ ≅ C_n × C2).
    pub warning: Option<String>,
}

pub fn preset(p: &Preset) -> Result<PresetData, GroupError> {
    match p {
        Preset::ProductWithC2(base) => {
            let b = base.build();
            let n = b.order();
            // (g, s) ↦ index s*n + g.
            let mut table = vec![0usize; (2 * n) * (2 * n)];
            for s in 0..2 {
                for g in 0..n {
                    for t in 0..2 {
                        for h in 0..n {
                            let a = s * n + g;
                            let c = t * n + h;
                            table[a * 2 * n + c] = ((s + t) % 2) * n + b.mul(g, h);
                        }
                    }
                }
            }
            let mut names: Vec<String> = (0..n).map(|g| b.name(g).to_string()).collect();
            names.extend((0..n).map(|g| format!("{}·c", b.name(g))));
            let mut hat = FiniteGroup::from_flat_table(2 * n, table, None)?;
            hat.set_names(names);
            let grading = (0..2 * n).map(|a| if a < n { 1 } else { -1 }).collect();
            let graded = Arc::new(GradedGroup::new(hat, grading)?);
            let kernel_generator = match base {
                BaseGroup::Cyclic(m) if *m > 1 => Some(1),
                _ => None,
            };
            Ok(PresetData {
                name: format!("product_with_C2({base:?})"),
                lambda_trivial: UCharacter::trivial(&graded),
                lambda_pi: UCharacter::pi(&graded),
                graded,
                kernel_generator,
                warning: None,
            })
        }
        Preset::CyclicDouble(n) => {
            if *n == 0 {
                return Err(GroupError::BadParameter("cyclic_double needs n ≥ 1".into()));
            }
            let hat_order = 2 * n;
            let mut hat = FiniteGroup::cyclic(hat_order);
            hat.set_names(
                (0..hat_order)
                    .map(|j| match (j, j % 2) {
                        (0, _) => "e".into(),
                        (1, _) => "s".into(),
                        (2, _) => "r".into(),
                        (3, _) => "s·r".into(),
                        (_, 0) => format!("r{}", j / 2),
                        _ => format!("s·r{}", j / 2),
                    })
                    .collect(),
            );
            let grading = (0..hat_order).map(|j| if j % 2 == 0 { 1 } else { -1 }).collect();
            let graded = Arc::new(GradedGroup::new(hat, grading)?);
            let warning = (n % 2 == 1 && *n > 1)
                .then(|| "odd n: Ĝ is isomorphic to C_n × C2 as a graded group".to_string());
            Ok(PresetData {
                name: format!("cyclic_double({n})"),
                lambda_trivial: UCharacter::trivial(&graded),
                lambda_pi: UCharacter::pi(&graded),
                // ς² = element 2 of Ĝ, which is kernel element 1.
                kernel_generator: (*n > 1).then_some(1),
                graded,
                warning,
            })
        }
        Preset::Dihedral(n) => {
            if *n == 0 {
                return Err(GroupError::BadParameter("dihedral needs n ≥ 1".into()));
            }
            let m = 2 * n;
            let mut table = vec![0usize; m * m];
            // Indices: j < n is r^j, n + j is s·r^j, with s r^j s = r^{-j}.
            let idx = |flip: usize, rot: usize| flip * n + rot;
            for f1 in 0..2 {
                for j1 in 0..*n {
                    for f2 in 0..2 {
                        for j2 in 0..*n {
                            // (s^{f1} r^{j1})·(s^{f2} r^{j2}) = s^{f1+f2} r^{∓j1+j2}
                            let rot = if f2 == 1 {
                                (j2 + n - j1) % n
                            } else {
                                (j1 + j2) % n
                            };
                            table[idx(f1, j1) * m + idx(f2, j2)] = idx((f1 + f2) % 2, rot);
                        }
                    }
                }
            }
            let mut names: Vec<String> = (0..*n)
                .map(|j| if j == 0 { "e".into() } else { format!("r{j}") })
                .collect();
            names.extend((0..*n).map(|j| if j == 0 { "s".into() } else { format!("s·r{j}") }));
            let mut hat = FiniteGroup::from_flat_table(m, table, None)?;
            hat.set_names(names);
            let grading = (0..m).map(|a| if a < *n { 1 } else { -1 }).collect();
            let graded = Arc::new(GradedGroup::new(hat, grading)?);
            Ok(PresetData {
                name: format!("dihedral({n})"),
                lambda_trivial: UCharacter::trivial(&graded),
                lambda_pi: UCharacter::pi(&graded),
                kernel_generator: (*n > 1).then_some(1),
                graded,
                warning: None,
            })
        }
        Preset::Quaternion => {
            // Order: 1, i, -1, -i, j, ij, -j, -ij with π(i) = 1, π(j) = -1.
            let names = ["1", "i", "-1", "-i", "j", "ij", "-j", "-ij"];
            // Encode x = i^a j^b (a mod 4, b mod 2) with j i = i^3 j and j² = i².
            let enc = |a: usize, b: usize| -> usize {
                if b == 0 {
                    a % 4
                } else {
                    4 + (a % 4)
                }
            };
            let mut table = vec![0usize; 64];
            for a1 in 0..4 {
                for b1 in 0..2 {
                    for a2 in 0..4 {
                        for b2 in 0..2 {
                            // (i^a1 j^b1)(i^a2 j^b2): move j^b1 past i^a2.
                            let a2m = if b1 == 1 { (4 - a2) % 4 } else { a2 };
                            let extra = if b1 == 1 && b2 == 1 { 2 } else { 0 }; // j² = i²
                            let a = (a1 + a2m + extra) % 4;
                            let b = (b1 + b2) % 2;
                            table[enc(a1, b1) * 8 + enc(a2, b2)] = enc(a, b);
                        }
                    }
                }
            }
            let mut hat = FiniteGroup::from_flat_table(8, table, None)?;
            hat.set_names(names.iter().map(|s| s.to_string()).collect());
            let grading = (0..8).map(|x| if x < 4 { 1 } else { -1 }).collect();
            let graded = Arc::new(GradedGroup::new(hat, grading)?);
            Ok(PresetData {
                name: "quaternion".into(),
                lambda_trivial: UCharacter::trivial(&graded),
                lambda_pi: UCharacter::pi(&graded),
                kernel_generator: Some(1), // i
                graded,
                warning: None,
            })
        }
        Preset::S4OverA4 => {
            let perms = s4_permutations();
            let mut hat = FiniteGroup::from_permutations(
                &[vec![1, 2, 3, 0], vec![1, 0, 2, 3]],
                DEFAULT_ORDER_CAP,
            )?;
            assert_eq!(hat.order(), 24);
            let grading: Vec<i8> = perms.iter().map(|p| permutation_sign(p)).collect();
            hat.set_names(perms.iter().map(|p| cycle_notation(p)).collect());
            let graded = Arc::new(GradedGroup::new(hat, grading)?);
            Ok(PresetData {
                name: "S4_over_A4".into(),
                lambda_trivial: UCharacter::trivial(&graded),
                lambda_pi: UCharacter::pi(&graded),
                kernel_generator: None,
                graded,
                warning: None,
            })
        }
    }
}

/// The elements of S4 in the same breadth-first order used by
/// `from_permutations(&[(0 1 2 3), (0 1)])`.
fn s4_permutations() -> Vec<Vec<usize>> {
    let generators = [vec![1usize, 2, 3, 0], vec![1usize, 0, 2, 3]];
    let id: Vec<usize> = (0..4).collect();
    let mut elems = vec![id];
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for gen in &generators {
            let composed: Vec<usize> = (0..4).map(|x| elems[i][gen[x]]).collect();
            if !elems.contains(&composed) {
                elems.push(composed);
                queue.push_back(elems.len() - 1);
            }
        }
    }
    elems
}

fn permutation_sign(p: &[usize]) -> i8 {
    let mut seen = vec![false; p.len()];
    let mut sign = 1i8;
    for start in 0..p.len() {
        if seen[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p[x];
            len += 1;
        }
        if len % 2 == 0 {
            sign = -sign;
        }
    }
    sign
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 0..p.len() {
        if seen[start] || p[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        loop {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = p[x];
            if x == start {
                break;
            }
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("e");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_and_c2_tables() {
        let t = FiniteGroup::from_cayley(&[vec![0]]).unwrap();
        assert_eq!(t.order(), 1);
        let c2 = FiniteGroup::from_cayley(&[vec![0, 1], vec![1, 0]]).unwrap();
        assert_eq!(c2.order(), 2);
        assert_eq!(c2.id(), 0);
        assert_eq!(c2.inv(1), 1);
    }

    #[test]
    fn bad_tables_are_rejected() {
        assert!(matches!(
            FiniteGroup::from_cayley(&[vec![0, 0], vec![1, 1]]),
            Err(GroupError::NotAPermutation(_))
        ));
        // Subtraction mod 3 is a Latin square without a two-sided identity.
        let sub: Vec<Vec<usize>> = (0..3)
            .map(|a| (0..3).map(|b| (3 + a - b) % 3).collect())
            .collect();
        assert!(matches!(
            FiniteGroup::from_cayley(&sub),
            Err(GroupError::NoIdentity)
        ));
        // A loop of order 5 with identity and inverses that fails associativity.
        let loop5 = vec![
            vec![0, 1, 2, 3, 4],
            vec![1, 0, 3, 4, 2],
            vec![2, 4, 0, 1, 3],
            vec![3, 2, 4, 0, 1],
            vec![4, 3, 1, 2, 0],
        ];
        assert!(matches!(
            FiniteGroup::from_cayley(&loop5),
            Err(GroupError::NotAssociative(_, _, _))
        ));
    }

    /// Independent oracle for the S3 example: compose permutations of 3
    /// letters directly and compare class data.
    #[test]
    fn s3_from_composition_has_three_classes() {
        let s3 = BaseGroup::S3.build();
        assert_eq!(s3.order(), 6);
        let classes = s3.conjugacy_classes();
        assert_eq!(classes.len(), 3);
        let mut sizes: Vec<usize> = classes.iter().map(|c| c.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 3]);
    }

    #[test]
    fn permutation_closures() {
        let c3 = FiniteGroup::from_permutations(&[vec![1, 2, 0]], 100).unwrap();
        assert_eq!(c3.order(), 3);
        // Dihedral pair on the square: rotation and a reflection.
        let d8 = FiniteGroup::from_permutations(&[vec![1, 2, 3, 0], vec![1, 0, 3, 2]], 100).unwrap();
        assert_eq!(d8.order(), 8);
        let a4 = FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], 100).unwrap();
        assert_eq!(a4.order(), 12);
        assert!(matches!(
            FiniteGroup::from_permutations(&[vec![1, 2, 3, 0]], 3),
            Err(GroupError::ClosureTooLarge(3))
        ));
    }

    #[test]
    fn closure_ordering_is_deterministic() {
        let a = FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], 100).unwrap();
        let b = FiniteGroup::from_permutations(&[vec![1, 2, 0, 3], vec![1, 0, 3, 2]], 100).unwrap();
        assert_eq!(a.cayley_rows(), b.cayley_rows());
    }

    #[test]
    fn grading_validation() {
        let c2 = FiniteGroup::from_cayley(&[vec![0, 1], vec![1, 0]]).unwrap();
        let g = GradedGroup::new(c2.clone(), vec![1, -1]).unwrap();
        assert_eq!(g.kernel().order(), 1);
        assert!(matches!(
            GradedGroup::new(c2.clone(), vec![1, 1]),
            Err(GroupError::NotSurjective)
        ));
        let c3 = FiniteGroup::cyclic(3);
        assert!(matches!(
            GradedGroup::new(c3, vec![1, -1, -1]),
            Err(GroupError::NotHomomorphism(_, _))
        ));
    }

    #[test]
    fn c4_over_c2_kernel() {
        let data = preset(&Preset::CyclicDouble(2)).unwrap();
        assert_eq!(data.graded.hat().order(), 4);
        assert_eq!(data.graded.kernel().order(), 2);
        assert_eq!(data.graded.sign(1), -1);
    }

    #[test]
    fn quaternion_grading() {
        let data = preset(&Preset::Quaternion).unwrap();
        let g = &data.graded;
        assert_eq!(g.hat().order(), 8);
        assert_eq!(g.kernel().order(), 4);
        // Kernel is cyclic of order 4 generated by i.
        let i = data.kernel_generator.unwrap();
        let k = g.kernel();
        assert_eq!(k.mul(i, i), 2); // i² = -1
        assert_eq!(k.mul(k.mul(i, i), k.mul(i, i)), k.id());
        // j² = -1 in the hat group.
        let j = 4;
        assert!(g.is_odd(j));
        assert_eq!(g.hat().mul(j, j), 2);
    }

    #[test]
    fn dihedral_presets() {
        for n in [3usize, 4] {
            let data = preset(&Preset::Dihedral(n)).unwrap();
            let g = &data.graded;
            assert_eq!(g.hat().order(), 2 * n);
            assert_eq!(g.kernel().order(), n);
            // All reflections are involutions.
            for &w in g.odd_elements() {
                assert_eq!(g.hat().mul(w, w), g.hat().id());
            }
        }
    }

    #[test]
    fn s4_over_a4_preset() {
        let data = preset(&Preset::S4OverA4).unwrap();
        let g = &data.graded;
        assert_eq!(g.hat().order(), 24);
        assert_eq!(g.kernel().order(), 12);
        // Odd part: 6 transpositions squaring to e and 6 four-cycles.
        let squares_to_id = g
            .odd_elements()
            .iter()
            .filter(|&&w| g.hat().mul(w, w) == g.hat().id())
            .count();
        assert_eq!(squares_to_id, 6);
    }

    #[test]
    fn odd_times_odd_is_even() {
        for p in [
            Preset::Quaternion,
            Preset::Dihedral(3),
            Preset::CyclicDouble(2),
            Preset::S4OverA4,
        ] {
            let data = preset(&p).unwrap();
            let g = &data.graded;
            assert_eq!(g.odd_elements().len(), g.kernel().order());
            for &a in g.odd_elements() {
                for &b in g.odd_elements() {
                    assert!(!g.is_odd(g.hat().mul(a, b)));
                }
            }
        }
    }

    #[test]
    fn conjugacy_classes_are_stable() {
        let data = preset(&Preset::S4OverA4).unwrap();
        let k = data.graded.kernel();
        for class in k.conjugacy_classes() {
            for &g in &class {
                for h in k.elements() {
                    assert!(class.contains(&k.conj(h, g)));
                }
            }
        }
    }

    #[test]
    fn characters_validate() {
        let data = preset(&Preset::CyclicDouble(2)).unwrap();
        let lam = UCharacter::pi(&data.graded);
        assert!(lam.eval(1) == Phase::minus_one());
        let bad = UCharacter::new(
            &data.graded,
            vec![Phase::one(), Phase::new(1, 3), Phase::one(), Phase::one()],
        );
        assert!(bad.is_err());
    }

    #[test]
    fn cyclic_double_odd_n_is_flagged() {
        let data = preset(&Preset::CyclicDouble(3)).unwrap();
        assert!(data.warning.is_some());
        assert!(preset(&Preset::CyclicDouble(2)).unwrap().warning.is_none());
    }
}
