//! Spined-category and S-functor contracts, the `Nat` instance, and the
//! generic law checkers shared by every instance.

use std::fmt::Debug;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The distinguished cocone assigned to a span `G <- Ω_n -> H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProxyPushout<O, M> {
    pub apex: O,
    /// `G -> apex`
    pub leg_g: M,
    /// `H -> apex`
    pub leg_h: M,
}

/// A span `G <-g- Ω_n -h-> H` out of a spine object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Span<M> {
    pub g: M,
    pub h: M,
}

/// The data `G' <-g'- G <-g- Ω_n -h-> H -h'-> H'` of the mediating-morphism law.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedSpan<M> {
    pub g: M,
    pub h: M,
    pub g_ext: M,
    pub h_ext: M,
}

/// A category equipped with a spine `Ω: ℕ -> ob C` and proxy pushouts.
///
/// Morphisms carry their endpoints. Morphism equality is the pointwise
/// equality of the underlying data (`PartialEq` on `Morphism`).
pub trait SpinedCategory: Sync {
    type Object: Clone + Debug + PartialEq + Send + Sync;
    type Morphism: Clone + Debug + PartialEq + Send + Sync;

    fn source<'a>(&self, m: &'a Self::Morphism) -> &'a Self::Object;
    fn target<'a>(&self, m: &'a Self::Morphism) -> &'a Self::Object;

    fn identity(&self, x: &Self::Object) -> Self::Morphism;

    /// `outer ∘ inner`; fails when `target(inner) != source(outer)`.
    fn compose(&self, outer: &Self::Morphism, inner: &Self::Morphism) -> Result<Self::Morphism>;

    fn is_valid_morphism(&self, m: &Self::Morphism) -> bool;

    fn spine(&self, n: usize) -> Self::Object;

    /// Some `n` with `C(x, Ω_n)` nonempty.
    fn spine_index(&self, x: &Self::Object) -> usize;

    /// A morphism `x -> spine(spine_index(x))`.
    fn spine_witness(&self, x: &Self::Object) -> Option<Self::Morphism> {
        let spine = self.spine(self.spine_index(x));
        self.hom_set(x, &spine, Some(1)).into_iter().next()
    }

    fn proxy_pushout(
        &self,
        g: &Self::Morphism,
        h: &Self::Morphism,
    ) -> Result<ProxyPushout<Self::Object, Self::Morphism>>;

    /// The arrow `P(g, h) -> P(g' ∘ g, h' ∘ h)` of the mediating-morphism law.
    fn mediating(
        &self,
        g: &Self::Morphism,
        h: &Self::Morphism,
        g_ext: &Self::Morphism,
        h_ext: &Self::Morphism,
    ) -> Result<Self::Morphism>;

    /// All morphisms `from -> to` in a deterministic order, truncated at `limit`.
    fn hom_set(&self, from: &Self::Object, to: &Self::Object, limit: Option<usize>) -> Vec<Self::Morphism>;

    fn has_morphism(&self, from: &Self::Object, to: &Self::Object) -> bool {
        !self.hom_set(from, to, Some(1)).is_empty()
    }
}

/// A Nat-valued spinal functor. Only the object part is stored: `Nat` is a
/// poset, so the image of an arrow is determined by its endpoints.
pub trait SFunctor<C: SpinedCategory + ?Sized>: Sync {
    fn name(&self) -> &str;
    fn value(&self, category: &C, x: &C::Object) -> usize;
}

/// Wraps a closure as an [`SFunctor`] candidate.
pub struct FnFunctor<F> {
    name: String,
    f: F,
}

impl<F> FnFunctor<F> {
    pub fn new(name: impl Into<String>, f: F) -> Self {
        FnFunctor { name: name.into(), f }
    }
}

impl<C, F> SFunctor<C> for FnFunctor<F>
where
    C: SpinedCategory + ?Sized,
    F: Fn(&C::Object) -> usize + Sync,
{
    fn name(&self) -> &str {
        &self.name
    }

    fn value(&self, _category: &C, x: &C::Object) -> usize {
        (self.f)(x)
    }
}

/// Supremum of the two targets of a span `n <= a`, `n <= b` in `(ℕ, ≤)`.
pub fn nat_proxy_pushout(n: usize, a: usize, b: usize) -> Result<usize> {
    if n > a || n > b {
        return Err(Error::PreconditionViolation(format!(
            "spine object {n} does not map into both {a} and {b}"
        )));
    }
    Ok(a.max(b))
}

/// The unique arrow `from <= to` of the poset `(ℕ, ≤)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NatArrow {
    pub from: usize,
    pub to: usize,
}

impl NatArrow {
    pub fn new(from: usize, to: usize) -> Result<Self> {
        if from > to {
            return Err(Error::PreconditionViolation(format!("{from} > {to}")));
        }
        Ok(NatArrow { from, to })
    }
}

/// `(ℕ, ≤)` with spine `Ω_n = n` and suprema as proxy pushouts.
#[derive(Debug, Clone, Copy, Default)]
pub struct NatCategory;

impl SpinedCategory for NatCategory {
    type Object = usize;
    type Morphism = NatArrow;

    fn source<'a>(&self, m: &'a NatArrow) -> &'a usize {
        &m.from
    }

    fn target<'a>(&self, m: &'a NatArrow) -> &'a usize {
        &m.to
    }

    fn identity(&self, x: &usize) -> NatArrow {
        NatArrow { from: *x, to: *x }
    }

    fn compose(&self, outer: &NatArrow, inner: &NatArrow) -> Result<NatArrow> {
        if inner.to != outer.from {
            return Err(Error::NotComposable(format!("{inner:?} then {outer:?}")));
        }
        Ok(NatArrow {
            from: inner.from,
            to: outer.to,
        })
    }

    fn is_valid_morphism(&self, m: &NatArrow) -> bool {
        m.from <= m.to
    }

    fn spine(&self, n: usize) -> usize {
        n
    }

    fn spine_index(&self, x: &usize) -> usize {
        *x
    }

    fn proxy_pushout(&self, g: &NatArrow, h: &NatArrow) -> Result<ProxyPushout<usize, NatArrow>> {
        if g.from != h.from {
            return Err(Error::PreconditionViolation(format!(
                "span legs start at {} and {}",
                g.from, h.from
            )));
        }
        let apex = nat_proxy_pushout(g.from, g.to, h.to)?;
        Ok(ProxyPushout {
            apex,
            leg_g: NatArrow::new(g.to, apex)?,
            leg_h: NatArrow::new(h.to, apex)?,
        })
    }

    fn mediating(&self, g: &NatArrow, h: &NatArrow, g_ext: &NatArrow, h_ext: &NatArrow) -> Result<NatArrow> {
        if g_ext.from != g.to || h_ext.from != h.to {
            return Err(Error::MediatingNotFound(
                "extensions do not start at the span targets".into(),
            ));
        }
        let inner = self.proxy_pushout(g, h)?;
        let outer = self.proxy_pushout(&self.compose(g_ext, g)?, &self.compose(h_ext, h)?)?;
        NatArrow::new(inner.apex, outer.apex).map_err(|e| Error::MediatingNotFound(e.to_string()))
    }

    fn hom_set(&self, from: &usize, to: &usize, limit: Option<usize>) -> Vec<NatArrow> {
        if from <= to && limit != Some(0) {
            vec![NatArrow { from: *from, to: *to }]
        } else {
            Vec::new()
        }
    }
}

/// The identity S-functor on `Nat`.
#[derive(Debug, Clone, Copy, Default)]
pub struct NatIdentity;

impl SFunctor<NatCategory> for NatIdentity {
    fn name(&self) -> &str {
        "identity"
    }

    fn value(&self, _category: &NatCategory, x: &usize) -> usize {
        *x
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawFailure {
    pub case: String,
    pub detail: String,
}

/// Outcome of a law check over a finite population.
///
/// `population_size` counts the cases examined. `enumeration_bound` is the
/// largest object or hom-set size the check was allowed to enumerate; results
/// say nothing about cases beyond it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LawReport {
    pub law: String,
    pub population_size: usize,
    pub failures: Vec<LawFailure>,
    pub enumeration_bound: usize,
    /// Per-case witnesses (the spine index for SC1). Not part of the JSON form.
    #[serde(skip)]
    pub witnesses: Vec<(String, usize)>,
}

impl LawReport {
    pub fn new(law: impl Into<String>, enumeration_bound: usize) -> Self {
        LawReport {
            law: law.into(),
            population_size: 0,
            failures: Vec::new(),
            enumeration_bound,
            witnesses: Vec::new(),
        }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn fail(&mut self, case: impl Into<String>, detail: impl Into<String>) {
        self.failures.push(LawFailure {
            case: case.into(),
            detail: detail.into(),
        });
    }

    /// Folds another report into this one, prefixing its cases with its law name.
    pub fn absorb(&mut self, other: LawReport) {
        self.population_size += other.population_size;
        self.enumeration_bound = self.enumeration_bound.max(other.enumeration_bound);
        for f in other.failures {
            self.failures.push(LawFailure {
                case: format!("{}: {}", other.law, f.case),
                detail: f.detail,
            });
        }
        self.witnesses.extend(other.witnesses);
    }
}

/// Checks associativity and identity laws on the composable triples drawn
/// from `morphisms`.
pub fn check_category_laws<C: SpinedCategory + ?Sized>(instance: &C, morphisms: &[C::Morphism]) -> LawReport {
    let mut report = LawReport::new("category", morphisms.len());
    for f in morphisms {
        report.population_size += 1;
        let src = instance.identity(instance.source(f));
        let tgt = instance.identity(instance.target(f));
        match (instance.compose(f, &src), instance.compose(&tgt, f)) {
            (Ok(a), Ok(b)) if &a == f && &b == f => {}
            _ => report.fail(format!("{f:?}"), "identity is not neutral"),
        }
        for g in morphisms.iter().filter(|g| instance.source(g) == instance.target(f)) {
            for h in morphisms.iter().filter(|h| instance.source(h) == instance.target(g)) {
                let left = instance.compose(h, g).and_then(|hg| instance.compose(&hg, f));
                let right = instance.compose(g, f).and_then(|gf| instance.compose(h, &gf));
                if left.is_err() || left != right {
                    report.fail(format!("{f:?} ; {g:?} ; {h:?}"), "composition is not associative");
                }
            }
        }
    }
    report
}

/// SC1: every object maps into some spine object. The witness morphism is
/// constructed and validated; objects whose spine index exceeds `bound` are
/// reported as failures.
pub fn check_sc1<C: SpinedCategory + ?Sized>(instance: &C, population: &[C::Object], bound: usize) -> LawReport {
    let mut report = LawReport::new("sc1", bound);
    for x in population {
        report.population_size += 1;
        let n = instance.spine_index(x);
        if n > bound {
            report.fail(format!("{x:?}"), format!("no witness up to spine index {bound}"));
            continue;
        }
        let spine = instance.spine(n);
        match instance.spine_witness(x) {
            Some(w) if instance.is_valid_morphism(&w) && instance.source(&w) == x && instance.target(&w) == &spine => {
                report.witnesses.push((format!("{x:?}"), n));
            }
            Some(w) => report.fail(format!("{x:?}"), format!("invalid witness {w:?} into spine({n})")),
            None => report.fail(format!("{x:?}"), format!("no morphism into spine({n})")),
        }
    }
    report
}

fn legs_commute<C: SpinedCategory + ?Sized>(
    instance: &C,
    g: &C::Morphism,
    h: &C::Morphism,
    pushout: &ProxyPushout<C::Object, C::Morphism>,
) -> Result<bool> {
    Ok(instance.compose(&pushout.leg_g, g)? == instance.compose(&pushout.leg_h, h)?)
}

/// SC2: for each diagram, the mediating morphism exists, makes both squares
/// commute, and is the only commuting morphism among at most
/// `enumeration_bound` enumerated candidates.
pub fn check_sc2<C: SpinedCategory + ?Sized>(
    instance: &C,
    diagrams: &[ExtendedSpan<C::Morphism>],
    enumeration_bound: usize,
) -> LawReport {
    let mut report = LawReport::new("sc2", enumeration_bound);
    for d in diagrams {
        report.population_size += 1;
        if let Err(detail) = sc2_case(instance, d, enumeration_bound) {
            report.fail(format!("{d:?}"), detail);
        }
    }
    report
}

fn sc2_case<C: SpinedCategory + ?Sized>(
    instance: &C,
    d: &ExtendedSpan<C::Morphism>,
    enumeration_bound: usize,
) -> std::result::Result<(), String> {
    let err = |e: Error| e.to_string();
    for m in [&d.g, &d.h, &d.g_ext, &d.h_ext] {
        if !instance.is_valid_morphism(m) {
            return Err(format!("invalid input morphism {m:?}"));
        }
    }
    let inner = instance.proxy_pushout(&d.g, &d.h).map_err(err)?;
    let gg = instance.compose(&d.g_ext, &d.g).map_err(err)?;
    let hh = instance.compose(&d.h_ext, &d.h).map_err(err)?;
    let outer = instance.proxy_pushout(&gg, &hh).map_err(err)?;
    if !legs_commute(instance, &d.g, &d.h, &inner).map_err(err)?
        || !legs_commute(instance, &gg, &hh, &outer).map_err(err)?
    {
        return Err("proxy pushout cocone does not commute".into());
    }

    let mediating = instance
        .mediating(&d.g, &d.h, &d.g_ext, &d.h_ext)
        .map_err(|e| Error::MediatingNotFound(e.to_string()).to_string())?;
    if !instance.is_valid_morphism(&mediating)
        || instance.source(&mediating) != &inner.apex
        || instance.target(&mediating) != &outer.apex
    {
        return Err(Error::MediatingNotFound(format!("ill-typed {mediating:?}")).to_string());
    }

    let commutes = |m: &C::Morphism| -> Result<bool> {
        Ok(
            instance.compose(m, &inner.leg_g)? == instance.compose(&outer.leg_g, &d.g_ext)?
                && instance.compose(m, &inner.leg_h)? == instance.compose(&outer.leg_h, &d.h_ext)?,
        )
    };
    if !commutes(&mediating).map_err(err)? {
        return Err(Error::MediatingNotFound("diagram does not commute".into()).to_string());
    }

    let candidates = instance.hom_set(&inner.apex, &outer.apex, Some(enumeration_bound));
    let mut commuting = Vec::new();
    for m in &candidates {
        if commutes(m).map_err(err)? {
            commuting.push(m);
        }
    }
    if commuting.len() > 1 {
        return Err(Error::UniquenessViolation(format!(
            "{} commuting morphisms among {} enumerated",
            commuting.len(),
            candidates.len()
        ))
        .to_string());
    }
    if candidates.len() < enumeration_bound && commuting.first() != Some(&&mediating) {
        return Err("enumeration did not reproduce the mediating morphism".into());
    }
    Ok(())
}

/// SF1 for `n <= spine_bound`, SF2 on every span, and monotonicity on every
/// ordered pair of `population` joined by a morphism.
pub fn check_sfunctor_laws<C, F>(
    instance: &C,
    functor: &F,
    population: &[C::Object],
    spans: &[Span<C::Morphism>],
    spine_bound: usize,
) -> LawReport
where
    C: SpinedCategory + ?Sized,
    F: SFunctor<C> + ?Sized,
{
    let mut report = LawReport::new(format!("sfunctor/{}", functor.name()), spine_bound);

    for n in 0..=spine_bound {
        report.population_size += 1;
        let v = functor.value(instance, &instance.spine(n));
        if v != n {
            report.fail(format!("spine({n})"), format!("SF1: value {v} != {n}"));
        }
    }

    for span in spans {
        report.population_size += 1;
        match instance.proxy_pushout(&span.g, &span.h) {
            Ok(p) => {
                let a = functor.value(instance, instance.target(&span.g));
                let b = functor.value(instance, instance.target(&span.h));
                let apex = functor.value(instance, &p.apex);
                if apex != a.max(b) {
                    report.fail(
                        format!("{span:?}"),
                        format!("SF2: value(apex) = {apex} != max({a}, {b})"),
                    );
                }
            }
            Err(e) => report.fail(format!("{span:?}"), e.to_string()),
        }
    }

    let values: Vec<usize> = population.iter().map(|x| functor.value(instance, x)).collect();
    for (i, x) in population.iter().enumerate() {
        report.population_size += 1;
        for (j, y) in population.iter().enumerate() {
            if values[i] > values[j] && instance.has_morphism(x, y) {
                report.fail(
                    format!("{x:?} -> {y:?}"),
                    format!("not monotone: {} > {}", values[i], values[j]),
                );
            }
        }
    }
    report
}
