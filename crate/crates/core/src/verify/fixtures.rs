use super::instance::MonadInstance;
use super::selfdual::{build_alpha_from_beta, Pairing};
use super::VerifyError;
use crate::exact::{parse_form, FieldSpec, HomogeneousForm};
use crate::shapes::hartshorne_shape;
use crate::spectrum::Spectrum;

/// Shipped instance files, by file stem.
pub const FIXTURES: &[(&str, &str)] = &[
    ("p3", include_str!("../../../../fixtures/p3.json")),
    ("p4", include_str!("../../../../fixtures/p4.json")),
    ("p8", include_str!("../../../../fixtures/p8.json")),
    ("p10", include_str!("../../../../fixtures/p10.json")),
    ("p14", include_str!("../../../../fixtures/p14.json")),
    ("p17", include_str!("../../../../fixtures/p17.json")),
    ("p4_broken", include_str!("../../../../fixtures/p4_broken.json")),
    ("hartshorne1", include_str!("../../../../fixtures/hartshorne1.json")),
];

pub fn fixture_names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

pub fn fixture(name: &str) -> Result<MonadInstance, VerifyError> {
    let key = name.trim_end_matches(".json").to_ascii_lowercase();
    let (_, src) = FIXTURES
        .iter()
        .find(|(n, _)| *n == key)
        .ok_or_else(|| VerifyError::UnknownFixture(name.to_string()))?;
    MonadInstance::from_json(src)
}

/// The `s = 1` Hartshorne monad with `β = (z², w², x, y)ᵀ` and α built
/// from β by the symplectic pairing.
pub fn hartshorne_instance() -> Result<MonadInstance, VerifyError> {
    let field = FieldSpec::Rational;
    let shape = hartshorne_shape(1)?;
    let middle = shape.middle_twists();
    let beta: Vec<Vec<HomogeneousForm>> = ["z^2", "w^2", "x", "y"]
        .iter()
        .map(|s| Ok(vec![parse_form(s, field)?]))
        .collect::<Result<_, VerifyError>>()?;
    let pairing = Pairing::natural(&middle)?;
    let alpha = build_alpha_from_beta(&beta, &middle, &pairing);
    let mut m = MonadInstance::new(field, shape.a().to_vec(), middle, alpha, beta)?;
    m.label = Some("H1".into());
    m.expected_spectrum = Some(Spectrum::new(vec![-1, 0])?);
    Ok(m)
}
