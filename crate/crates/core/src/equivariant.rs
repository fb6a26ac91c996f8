//! Equivariant data on `C^N`, its validation, and assembly of the
//! determinantal ideal on the fixed subspace.
//!
//! For a profile pair `(alpha, i)` the Schur-component matrix has one row per
//! coordinate of weight `alpha` and columns
//!
//! ```text
//! [ d f_{alpha,1} ... d f_{alpha,l_alpha} | omega_1 ... omega_{n_alpha - k + 1} ]
//! ```
//!
//! all restricted to the fixed subspace. By Schur's lemma the differential of
//! an equivariant map on the line of coordinate `s` is multiplication by the
//! partial derivative in that coordinate, so the entries are plain partials
//! and form coefficients with the nontrivial coordinates set to zero.

use std::fmt;

use crate::group_rep::{Character, DiagonalRepresentation};
use crate::polyring::{Monomial, PolyMatrix, Polynomial};
use crate::scalar::ExactField;

/// `f` with `f(g x) = alpha(g) f(x)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivariantFunction<C> {
    pub character: Character,
    pub poly: Polynomial<C>,
}

/// `omega = sum_s a_s dx_s` with `omega(g u) = alpha(g) omega(u)`.
#[derive(Debug, Clone, PartialEq)]
pub struct EquivariantOneForm<C> {
    pub character: Character,
    pub coefficients: Vec<Polynomial<C>>,
}

impl<C: ExactField> EquivariantOneForm<C> {
    pub fn scaled(&self, factor: &C) -> Self {
        EquivariantOneForm {
            character: self.character.clone(),
            coefficients: self.coefficients.iter().map(|a| a.scale(factor)).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EquationSystem<C> {
    equations: Vec<EquivariantFunction<C>>,
}

impl<C: ExactField> EquationSystem<C> {
    pub fn new(equations: Vec<EquivariantFunction<C>>) -> Self {
        EquationSystem { equations }
    }

    pub fn empty() -> Self {
        EquationSystem { equations: Vec::new() }
    }

    pub fn equations(&self) -> &[EquivariantFunction<C>] {
        &self.equations
    }

    pub fn len(&self) -> usize {
        self.equations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.equations.is_empty()
    }

    /// `l_alpha`: number of equations of character `alpha`.
    pub fn count(&self, chi: &Character) -> usize {
        self.equations.iter().filter(|e| &e.character == chi).count()
    }

    pub fn of_character<'a>(&'a self, chi: &'a Character) -> impl Iterator<Item = &'a EquivariantFunction<C>> + 'a {
        self.equations.iter().filter(move |e| &e.character == chi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProfileEntry {
    pub character: Character,
    pub k: u32,
}

/// The k-profile: one entry per pair `(alpha, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KProfile {
    entries: Vec<ProfileEntry>,
}

impl KProfile {
    pub fn new(entries: Vec<ProfileEntry>) -> Self {
        KProfile { entries }
    }

    pub fn entries(&self) -> &[ProfileEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// 1-based index `i` of entry `pair` among the entries with its character.
    pub fn pair_index(&self, pair: usize) -> usize {
        let chi = &self.entries[pair].character;
        self.entries[..=pair].iter().filter(|e| &e.character == chi).count()
    }
}

/// `n_alpha = m_alpha - l_alpha`, negative when there are too many equations.
pub fn free_dimension<C: ExactField>(
    rep: &DiagonalRepresentation,
    equations: &EquationSystem<C>,
    chi: &Character,
) -> i64 {
    rep.multiplicity(chi) as i64 - equations.count(chi) as i64
}

/// Number of forms a pair with this `k` requires: `n_alpha - k + 1`.
pub fn required_forms<C: ExactField>(
    rep: &DiagonalRepresentation,
    equations: &EquationSystem<C>,
    entry: &ProfileEntry,
) -> usize {
    (free_dimension(rep, equations, &entry.character) - entry.k as i64 + 1).max(0) as usize
}

#[derive(Debug, Clone, PartialEq)]
pub struct IndexProblem<C> {
    rep: DiagonalRepresentation,
    equations: EquationSystem<C>,
    profile: KProfile,
    forms: Vec<Vec<EquivariantOneForm<C>>>,
}

/// One reason a problem is not admissible.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    ForeignCharacter { context: String, character: String },
    WrongArity { context: String, expected: usize, found: usize },
    EquationMonomial { equation: usize, monomial: String, found: String, declared: String },
    FormMonomial { pair: usize, form: usize, coordinate: String, monomial: String, found: String, declared: String },
    FormCharacter { pair: usize, form: usize, found: String, expected: String },
    TooManyEquations { total: usize, nvars: usize },
    EquationsExceedMultiplicity { character: String, equations: usize, multiplicity: usize },
    MovingEquationOnFixedBlock { equation: usize },
    NonPositiveK { pair: usize },
    KExceedsFreeDimension { pair: usize, k: u32, free: i64 },
    ProfileSum { sum: u64, expected: i64 },
    FormCount { pair: usize, expected: usize, found: usize },
    MissingForms { pairs: usize, form_lists: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ForeignCharacter { context, character } => {
                write!(f, "{context}: character {character} does not belong to the group")
            }
            Violation::WrongArity { context, expected, found } => {
                write!(f, "{context}: expected {expected} variables, found {found}")
            }
            Violation::EquationMonomial { equation, monomial, found, declared } => write!(
                f,
                "equation {}: monomial {monomial} has character {found}, declared {declared}",
                equation + 1
            ),
            Violation::FormMonomial { pair, form, coordinate, monomial, found, declared } => write!(
                f,
                "pair {} form {}: monomial {monomial} in the d{coordinate} coefficient gives character {found}, declared {declared}",
                pair + 1,
                form + 1
            ),
            Violation::FormCharacter { pair, form, found, expected } => write!(
                f,
                "pair {} form {}: character {found} differs from the pair character {expected}",
                pair + 1,
                form + 1
            ),
            Violation::TooManyEquations { total, nvars } => {
                write!(f, "{total} equations exceed the ambient dimension {nvars}")
            }
            Violation::EquationsExceedMultiplicity { character, equations, multiplicity } => write!(
                f,
                "{equations} equations of character {character} exceed its multiplicity {multiplicity}"
            ),
            Violation::MovingEquationOnFixedBlock { equation } => write!(
                f,
                "equation {} has nontrivial character but does not vanish on the fixed subspace",
                equation + 1
            ),
            Violation::NonPositiveK { pair } => write!(f, "pair {}: k must be positive", pair + 1),
            Violation::KExceedsFreeDimension { pair, k, free } => {
                write!(f, "pair {}: k = {k} exceeds n = {free}", pair + 1)
            }
            Violation::ProfileSum { sum, expected } => {
                write!(f, "profile sums to {sum}, but the fixed block has free dimension {expected}")
            }
            Violation::FormCount { pair, expected, found } => {
                write!(f, "pair {}: expected {expected} forms, found {found}", pair + 1)
            }
            Violation::MissingForms { pairs, form_lists } => {
                write!(f, "{pairs} profile pairs but {form_lists} form lists")
            }
        }
    }
}

/// Result of [`IndexProblem::validate`]. Notes are informational only.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
    pub notes: Vec<String>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_valid() {
            writeln!(f, "VALID")?;
        } else {
            writeln!(f, "INVALID")?;
            for v in &self.violations {
                writeln!(f, "  error: {v}")?;
            }
        }
        for n in &self.notes {
            writeln!(f, "  note: {n}")?;
        }
        Ok(())
    }
}

fn monomial_text<C: ExactField>(m: &Monomial, names: &[String]) -> String {
    Polynomial::<C>::term(m.clone(), C::one()).to_string_with(names)
}

impl<C: ExactField> IndexProblem<C> {
    /// Structural constructor; admissibility is checked by [`Self::validate`].
    pub fn new(
        rep: DiagonalRepresentation,
        equations: EquationSystem<C>,
        profile: KProfile,
        forms: Vec<Vec<EquivariantOneForm<C>>>,
    ) -> Self {
        IndexProblem { rep, equations, profile, forms }
    }

    pub fn rep(&self) -> &DiagonalRepresentation {
        &self.rep
    }

    pub fn equations(&self) -> &EquationSystem<C> {
        &self.equations
    }

    pub fn profile(&self) -> &KProfile {
        &self.profile
    }

    pub fn forms(&self) -> &[Vec<EquivariantOneForm<C>>] {
        &self.forms
    }

    /// Same data with the form collection replaced.
    pub fn with_forms(&self, forms: Vec<Vec<EquivariantOneForm<C>>>) -> Self {
        IndexProblem { forms, ..self.clone() }
    }

    pub fn with_profile(&self, profile: KProfile) -> Self {
        IndexProblem { profile, ..self.clone() }
    }

    /// `n_1 = m_1 - l_1`.
    pub fn fixed_free_dimension(&self) -> i64 {
        free_dimension(&self.rep, &self.equations, &self.rep.group().trivial_character())
    }

    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::default();
        let rep = &self.rep;
        let n = rep.nvars();
        let names = rep.names();
        let v = &mut report.violations;

        for (e, eq) in self.equations.equations().iter().enumerate() {
            let context = format!("equation {}", e + 1);
            if !rep.group().contains(&eq.character) {
                v.push(Violation::ForeignCharacter { context, character: eq.character.to_string() });
                continue;
            }
            if eq.poly.nvars() != n {
                v.push(Violation::WrongArity { context, expected: n, found: eq.poly.nvars() });
                continue;
            }
            for (m, _) in eq.poly.terms() {
                let found = rep.char_of_monomial(m).expect("arity checked");
                if found != eq.character {
                    v.push(Violation::EquationMonomial {
                        equation: e,
                        monomial: monomial_text::<C>(m, names),
                        found: found.to_string(),
                        declared: eq.character.to_string(),
                    });
                }
            }
            if !eq.character.is_trivial() && !eq.poly.substitute_zero(&rep.moving_coordinates()).is_zero() {
                v.push(Violation::MovingEquationOnFixedBlock { equation: e });
            }
        }

        if self.equations.len() > n {
            v.push(Violation::TooManyEquations { total: self.equations.len(), nvars: n });
        }
        let mut seen: Vec<Character> = Vec::new();
        for eq in self.equations.equations() {
            if seen.contains(&eq.character) || !rep.group().contains(&eq.character) {
                continue;
            }
            seen.push(eq.character.clone());
            let count = self.equations.count(&eq.character);
            let mult = rep.multiplicity(&eq.character);
            if count > mult {
                v.push(Violation::EquationsExceedMultiplicity {
                    character: eq.character.to_string(),
                    equations: count,
                    multiplicity: mult,
                });
            }
        }

        let entries = self.profile.entries();
        if entries.len() != self.forms.len() {
            v.push(Violation::MissingForms { pairs: entries.len(), form_lists: self.forms.len() });
        }
        let mut k_sum: u64 = 0;
        for (p, entry) in entries.iter().enumerate() {
            if !rep.group().contains(&entry.character) {
                v.push(Violation::ForeignCharacter {
                    context: format!("pair {}", p + 1),
                    character: entry.character.to_string(),
                });
                continue;
            }
            k_sum += entry.k as u64;
            let free = free_dimension(rep, &self.equations, &entry.character);
            if entry.k == 0 {
                v.push(Violation::NonPositiveK { pair: p });
            } else if entry.k as i64 > free {
                v.push(Violation::KExceedsFreeDimension { pair: p, k: entry.k, free });
            }
            let Some(forms) = self.forms.get(p) else { continue };
            let expected = required_forms(rep, &self.equations, entry);
            if forms.len() != expected {
                v.push(Violation::FormCount { pair: p, expected, found: forms.len() });
            }
            for (j, form) in forms.iter().enumerate() {
                if form.character != entry.character {
                    v.push(Violation::FormCharacter {
                        pair: p,
                        form: j,
                        found: form.character.to_string(),
                        expected: entry.character.to_string(),
                    });
                    continue;
                }
                let context = format!("pair {} form {}", p + 1, j + 1);
                if form.coefficients.len() != n {
                    v.push(Violation::WrongArity { context, expected: n, found: form.coefficients.len() });
                    continue;
                }
                for (s, a) in form.coefficients.iter().enumerate() {
                    if a.nvars() != n {
                        v.push(Violation::WrongArity { context: context.clone(), expected: n, found: a.nvars() });
                        continue;
                    }
                    for (m, _) in a.terms() {
                        let found =
                            rep.char_of_monomial(m).expect("arity checked").add(rep.weight(s)).expect("same group");
                        if found != form.character {
                            v.push(Violation::FormMonomial {
                                pair: p,
                                form: j,
                                coordinate: names[s].clone(),
                                monomial: monomial_text::<C>(m, names),
                                found: found.to_string(),
                                declared: form.character.to_string(),
                            });
                        }
                    }
                }
            }
        }
        let n1 = self.fixed_free_dimension();
        if k_sum as i64 != n1 {
            v.push(Violation::ProfileSum { sum: k_sum, expected: n1 });
        }

        for (e, eq) in self.equations.equations().iter().enumerate() {
            if !eq.character.is_trivial() && !entries.iter().any(|en| en.character == eq.character) {
                report.notes.push(format!(
                    "equation {} has character {} with no profile pair; it does not enter the ideal",
                    e + 1,
                    eq.character
                ));
            }
        }
        report
    }

    fn restrict(&self, p: &Polynomial<C>) -> Polynomial<C> {
        p.substitute_zero(&self.rep.moving_coordinates())
    }

    fn check(&self) -> Result<(), ValidationReport> {
        let report = self.validate();
        if report.is_valid() {
            Ok(())
        } else {
            Err(report)
        }
    }

    /// The matrix `A_{alpha,i}` for profile entry `pair`, over the fixed variables.
    pub fn schur_matrix(&self, pair: usize) -> Result<PolyMatrix<C>, ValidationReport> {
        self.check()?;
        Ok(self.schur_matrix_unchecked(pair))
    }

    fn schur_matrix_unchecked(&self, pair: usize) -> PolyMatrix<C> {
        let chi = &self.profile.entries()[pair].character;
        let rows = self.rep.coordinates_of(chi);
        let fixed_vars = self.rep.fixed_block().len();
        let mut columns: Vec<Vec<Polynomial<C>>> = Vec::new();
        for eq in self.equations.of_character(chi) {
            columns.push(rows.iter().map(|&s| self.restrict(&eq.poly.partial_derivative(s))).collect());
        }
        for form in &self.forms[pair] {
            columns.push(rows.iter().map(|&s| self.restrict(&form.coefficients[s])).collect());
        }
        let mut m = PolyMatrix::zeros(fixed_vars, rows.len(), columns.len());
        for (c, col) in columns.into_iter().enumerate() {
            for (r, p) in col.into_iter().enumerate() {
                m.set(r, c, p);
            }
        }
        m
    }

    /// Generators of the ideal on the fixed subspace: restricted trivial
    /// equations, then the maximal minors of every Schur matrix (row subsets
    /// in lexicographic order). Zero and repeated generators are dropped.
    pub fn assemble_ideal(&self) -> Result<Vec<Polynomial<C>>, ValidationReport> {
        self.check()?;
        let trivial = self.rep.group().trivial_character();
        let mut out: Vec<Polynomial<C>> = Vec::new();
        let mut push = |p: Polynomial<C>| {
            if !p.is_zero() && !out.contains(&p) {
                out.push(p);
            }
        };
        for eq in self.equations.of_character(&trivial) {
            push(self.restrict(&eq.poly));
        }
        for pair in 0..self.profile.len() {
            for minor in self.schur_matrix_unchecked(pair).maximal_minors() {
                push(minor);
            }
        }
        Ok(out)
    }
}
