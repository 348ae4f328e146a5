//! One function per subcommand, each returning a [`Report`].

use std::fs;
use std::path::Path;

use gcentre::algcore::io::{algebra_from_file, algebra_to_file, json_error, module_from_file, parse_field, AlgebraFile, ModuleFile};
use gcentre::algcore::linalg::Subspace;
use gcentre::algcore::{GradedAlgebra, GradedModule};
use gcentre::catalog::{a3, dual_numbers};
use gcentre::centres::{
    self as cz, anti_centre, bigraded_decomposition_check, centre_space, embedding_report, ghost_centre,
    invert_embedding, underline_g_centre,
};
use gcentre::exactmath::{
    char_combination_to_function, char_to_function, characters as character_list, verify_orthogonality, Field,
    FinAbGroup,
};
use gcentre::quiverderived::{
    appendix_b_in_window, is_tilting_complex, tilting_module_faithfulness, tilting_modules, AppendixReport,
    BoundedComplex, PathAlgebra, QuiverFile,
};
use gcentre::shiftnat::{delta_zeta_module, end_pi_regular, multiplication_transport};
use gcentre::smash::{end_phi_a, parse_action, smash_product, zeta_subalgebras, GroupAction, SmashFlavor};
use gcentre::{Error, Result};
use serde_json::Value;

use crate::report::Report;
use crate::{Project, Scenario};

const DEFAULT_WINDOW: (i64, i64) = (-3, 3);

fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn source(path: &Path) -> String {
    path.display().to_string()
}

enum Document {
    Algebra(AlgebraFile),
    Quiver(QuiverFile),
    Module(ModuleFile),
}

/// Classify a JSON document by its keys, then parse it strictly so errors
/// carry line and column.
fn read_document(path: &Path) -> Result<Document> {
    let text = read(path)?;
    let src = source(path);
    let value: Value = serde_json::from_str(&text).map_err(|e| json_error(&src, &e))?;
    let has = |k: &str| value.get(k).is_some();
    Ok(if has("vertices") {
        Document::Quiver(serde_json::from_str(&text).map_err(|e| json_error(&src, &e))?)
    } else if has("action") {
        Document::Module(serde_json::from_str(&text).map_err(|e| json_error(&src, &e))?)
    } else {
        Document::Algebra(serde_json::from_str(&text).map_err(|e| json_error(&src, &e))?)
    })
}

fn path_algebra(mut file: QuiverFile, field: Option<&str>) -> Result<PathAlgebra> {
    if let Some(f) = field {
        file.field = f.to_string();
    }
    let quiver = gcentre::quiverderived::Quiver::new(file.vertices, file.arrows)?;
    PathAlgebra::new(&quiver, parse_field(&file.field)?, file.parity)
}

/// An algebra file, or a quiver file read as its path algebra.
fn load_algebra(path: &Path, field: Option<&str>) -> Result<GradedAlgebra> {
    match read_document(path)? {
        Document::Algebra(mut file) => {
            if let Some(f) = field {
                file.field = f.to_string();
            }
            algebra_from_file(&file)
        }
        Document::Quiver(file) => Ok(path_algebra(file, field)?.algebra().clone()),
        Document::Module(_) => Err(Error::Parse(format!("{}: expected an algebra, found a module", source(path)))),
    }
}

fn load_quiver(path: &Path, field: Option<&str>) -> Result<PathAlgebra> {
    match read_document(path)? {
        Document::Quiver(file) => path_algebra(file, field),
        _ => Err(Error::Parse(format!("{}: expected a quiver file", source(path)))),
    }
}

fn basis_strings(s: &Subspace) -> Vec<Vec<String>> {
    s.basis().iter().map(|v| v.iter().map(ToString::to_string).collect()).collect()
}

fn header(a: &GradedAlgebra) -> Report {
    Report::new()
        .field("field", a.field().spec().to_string())
        .field("group", a.group().to_string())
        .field("algebra_dim", a.dim())
}

fn algebra_summary(a: &GradedAlgebra) -> Report {
    let group = a.group();
    header(a)
        .field("basis", a.names())
        .field(
            "degrees",
            a.degrees().iter().map(|&g| group.format_element(&group.element(g))).collect::<Vec<_>>(),
        )
        .field("generators", a.generators().len())
        .field("commutative", a.is_commutative())
}

pub fn validate(path: &Path, field: Option<&str>) -> Result<Report> {
    match read_document(path)? {
        Document::Algebra(mut file) => {
            if let Some(f) = field {
                file.field = f.to_string();
            }
            let a = algebra_from_file(&file)?;
            Ok(Report::new().field("kind", "algebra").merge(algebra_summary(&a).value()))
        }
        Document::Quiver(file) => {
            let parity = file.parity;
            let pa = path_algebra(file, field)?;
            let q = pa.quiver();
            Ok(Report::new()
                .field("kind", "quiver")
                .field("vertices", q.vertices())
                .field("arrows", q.arrows().iter().map(|a| a.name.clone()).collect::<Vec<_>>())
                .field("parity", parity)
                .merge(algebra_summary(pa.algebra()).value()))
        }
        Document::Module(file) => {
            let base = path.parent().unwrap_or(Path::new("."));
            let a = load_algebra(&base.join(&file.algebra), field)?;
            let m = module_from_file(&file, &a)?;
            let group = a.group();
            Ok(Report::new()
                .field("kind", "module")
                .field("algebra", &file.algebra)
                .field("dim", m.dim())
                .field(
                    "degrees",
                    m.degrees().iter().map(|&g| group.format_element(&group.element(g))).collect::<Vec<_>>(),
                ))
        }
    }
}

pub fn centre(path: &Path, field: Option<&str>) -> Result<Report> {
    let a = load_algebra(path, field)?;
    Ok(Report::new().merge(cz::centre(&a)?))
}

pub fn g_centre(path: &Path, field: Option<&str>) -> Result<Report> {
    let a = load_algebra(path, field)?;
    let gc = cz::g_centre(&a);
    let closure = gc.check_closure();
    Ok(Report::new()
        .merge(gc.report()?)
        .field("closure", &closure)
        .check("closed_under_product", closure.closed)
        .check("contains_unit", closure.contains_unit)
        .check("g_action_invertible", closure.action_invertible))
}

pub fn extended_centre(path: &Path, field: Option<&str>) -> Result<Report> {
    let a = load_algebra(path, field)?;
    let ext = cz::extended_centre(&a)?;
    let gc = cz::g_centre(&a);
    let emb = embedding_report(&a, &ext, &gc);
    let invertible = !gcentre::exactmath::characteristic_divides(a.field(), a.group().order() as u64);
    Ok(Report::new()
        .merge(ext.report()?)
        .field("embedding", &emb)
        .check("embedding", emb.holds())
        .check("dimension_equality", !invertible || emb.bijective)
        .check("vanishing_products", ext.vanishing_violations().is_empty()))
}

pub fn super_centre(path: &Path, field: Option<&str>) -> Result<Report> {
    let a = load_algebra(path, field)?;
    let sz = cz::super_centre(&a)?;
    let az = anti_centre(&a)?;
    let d = bigraded_decomposition_check(&a)?;
    Ok(header(&a)
        .field("super_centre_dim", sz.dim())
        .field("super_centre_basis", basis_strings(&sz))
        .field("anti_centre_dim", az.dim())
        .field("anti_centre_basis", basis_strings(&az))
        .field("decomposition", &d)
        .check("slots_agree", d.holds()))
}

pub fn ghost(path: &Path, field: Option<&str>) -> Result<Report> {
    let a = load_algebra(path, field)?;
    let gh = ghost_centre(&a)?;
    let under = underline_g_centre(&a);
    let same = gh.contains_subspace(&under) && under.contains_subspace(&gh);
    Ok(header(&a)
        .field("ghost_dim", gh.dim())
        .field("ghost_basis", basis_strings(&gh))
        .field("underline_g_centre_dim", under.dim())
        .check("ghost_equals_underline_g_centre", same))
}

pub fn smash(path: &Path, action: &str, op: bool, field: Option<&str>) -> Result<Report> {
    let a = load_algebra(path, field)?;
    let phi = if action == "grading" {
        GroupAction::from_grading(&a)?
    } else {
        let p = Path::new(action);
        parse_action(&read(p)?, &source(p), &a)?
    };
    let flavor = if op { SmashFlavor::Op } else { SmashFlavor::Standard };
    let s = smash_product(&phi, flavor)?;
    let zeta = zeta_subalgebras(&phi)?.summary();
    let endphi = end_phi_a(&phi)?.summary();
    Ok(header(&a)
        .field("acting_group", phi.group().to_string())
        .field("flavor", flavor)
        .field("smash_dim", s.dim())
        .field("smash", algebra_to_file(&s.algebra))
        .field("zeta", &zeta)
        .field("end_phi", &endphi)
        .check("zeta_upper_isomorphism", zeta.upper_isomorphic)
        .check("zeta_lower_isomorphism", zeta.lower_isomorphic)
        .check("end_phi_isomorphism", endphi.isomorphism))
}

pub fn end_pi(path: &Path, field: Option<&str>) -> Result<Report> {
    let a = load_algebra(path, field)?;
    let end = end_pi_regular(&a)?.summary();
    let transport = multiplication_transport(&a, &[])?.summary();
    let dz = delta_zeta_module(&a, &GradedModule::regular(&a))?;
    let dzs = dz.summary();
    Ok(header(&a)
        .field("end_pi", &end)
        .field("transport", &transport)
        .field("delta_zeta", &dzs)
        .check("end_pi_is_opposite", end.isomorphism_to_opposite && end.graded)
        .check("round_trip", transport.round_trip)
        .check("naturality", transport.naturality)
        .check("composition_is_opposite_product", transport.opposite_isomorphism)
        .check("delta_zeta", dz.holds()))
}

/// `Q` when the exponent is at most 2, else `Q(zeta_e)`.
fn default_character_field(group: &FinAbGroup) -> Result<Field> {
    let e = group.exponent();
    if e <= 2 {
        Ok(Field::rationals())
    } else {
        Field::cyclotomic(u32::try_from(e).map_err(|_| Error::InvalidField(format!("exponent {e} too large")))?)
    }
}

pub fn characters(factors: &[u64], field: Option<&str>) -> Result<Report> {
    let group = FinAbGroup::new(factors.to_vec())?;
    let field = match field {
        Some(f) => parse_field(f)?,
        None => default_character_field(&group)?,
    };
    let orth = verify_orthogonality(&group, field)?;
    let chars = character_list(&group, field)?;
    let order = group.order();
    // f -> coefficients -> f on every character
    let mut round_trip = true;
    for (i, chi) in chars.iter().enumerate() {
        let coeffs = gcentre::exactmath::function_to_char(&group, field, &char_to_function(chi))?;
        round_trip &= coeffs.iter().enumerate().all(|(j, c)| c.is_one() == (i == j) && (i == j || c.is_zero()));
        round_trip &= char_combination_to_function(&chars, &coeffs) == chi.values();
    }
    let table: Vec<Value> = chars
        .iter()
        .map(|chi| {
            serde_json::json!({
                "label": chi.label(),
                "values": chi.values().iter().map(ToString::to_string).collect::<Vec<_>>(),
            })
        })
        .collect();
    Ok(Report::new()
        .field("group", group.to_string())
        .field("field", field.spec().to_string())
        .field("order", order)
        .field(
            "elements",
            group.elements().iter().map(|g| group.format_element(g)).collect::<Vec<_>>(),
        )
        .field("characters", table)
        .field("orthogonality", &orth)
        .check("orthogonality", orth.holds())
        .check("inversion_round_trip", round_trip))
}

fn appendix_report(pa: &PathAlgebra, window: (i64, i64)) -> Result<(Report, AppendixReport)> {
    let r = appendix_b_in_window(pa, window)?;
    let modules_injective = r.verdict.ends_with("on all tilting modules injective");
    let report = Report::new()
        .merge(&r)
        .check("hom_x1_x2_is_one_dimensional", r.hom_x1_x2_dim == 1)
        .check("eta_spanned_by_ba_tensor_ba", r.eta_is_ba_tensor_ba)
        .check("eta_nonzero_only_on_p1", r.eta_nonzero_only_on_p1)
        .check("p1_image_in_socle", r.p1_image_in_socle)
        .check("t_is_tilting", r.tilting.passes())
        .check("evaluation_at_t_has_kernel", r.evaluation_at_t.kernel_dim > 0)
        .check("evaluation_on_tilting_modules_injective", modules_injective);
    Ok((report, r))
}

fn tilting_report(pa: &PathAlgebra, window: Option<(i64, i64)>) -> Result<Report> {
    let tilts = tilting_modules(pa)?;
    let mut entries = Vec::new();
    let mut all_pass = true;
    for (supports, m) in &tilts {
        let summands = supports
            .iter()
            .map(|s| Ok(BoundedComplex::concentrated(&pa.thin_module(s)?, 0)))
            .collect::<Result<Vec<_>>>()?;
        let verdict = is_tilting_complex(pa, &summands, window)?;
        all_pass &= verdict.passes();
        entries.push(serde_json::json!({
            "summands": supports.iter().map(|s| s.iter().map(|v| v + 1).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "dim": m.dim(),
            "verdict": verdict,
        }));
    }
    let faithful = tilting_module_faithfulness(pa)?;
    Ok(Report::new()
        .field("tilting_module_count", tilts.len())
        .field("tilting_modules", entries)
        .field("faithfulness", &faithful)
        .check("tilting", all_pass)
        .check("evaluation_injective", faithful.failures.is_empty()))
}

pub fn quiver(path: &Path, project: Project, window: Option<(i64, i64)>, field: Option<&str>) -> Result<Report> {
    let pa = load_quiver(path, field)?;
    let head = header(pa.algebra()).field("vertices", pa.num_vertices());
    match project {
        Project::Tilting => Ok(head.merge(tilting_report(&pa, window)?.value())),
        Project::AppendixB => {
            let (r, _) = appendix_report(&pa, window.unwrap_or(DEFAULT_WINDOW))?;
            Ok(head.merge(r.value()))
        }
    }
}

fn scenario_field(field: Option<&str>) -> Result<Field> {
    field.map_or(Ok(Field::rationals()), parse_field)
}

pub fn scenario(name: Scenario, window: Option<(i64, i64)>, field: Option<&str>) -> Result<Report> {
    let field = scenario_field(field)?;
    match name {
        Scenario::DualNumbers => dual_numbers_scenario(field),
        Scenario::AppendixB => {
            let pa = a3(field, false);
            let (r, _) = appendix_report(&pa, window.unwrap_or(DEFAULT_WINDOW))?;
            let faithful = tilting_module_faithfulness(&pa)?;
            Ok(Report::new()
                .field("anchor", "A3 two-sided tilting example")
                .merge(header(pa.algebra()).value())
                .merge(r.value())
                .field("faithfulness", &faithful)
                .check("faithfulness_family", faithful.holds()))
        }
    }
}

fn dual_numbers_scenario(field: Field) -> Result<Report> {
    let a = dual_numbers(field);
    let z = centre_space(&a);
    let sz = cz::super_centre(&a)?;
    let az = anti_centre(&a)?;
    let gh = ghost_centre(&a)?;
    let gc = cz::g_centre(&a);
    let bigraded = gc.report()?.bigraded;
    let ext = cz::extended_centre(&a)?;
    let emb = embedding_report(&a, &ext, &gc);
    let group = a.group();
    let slot = |deg: usize, chi: &str| {
        let deg = group.format_element(&group.element(deg));
        bigraded
            .iter()
            .find(|b| b.degree == deg && b.character == chi)
            .map(|b| b.dim)
    };
    let slots_ok = slot(0, "chi(0)") == Some(1)
        && slot(1, "chi(1)") == Some(1)
        && slot(1, "chi(0)") == Some(1)
        && slot(0, "chi(1)") == Some(0);
    // the inverse of the embedding is undefined in characteristic 2
    let f2 = dual_numbers(Field::prime(2)?);
    let gc2 = cz::g_centre(&f2);
    let inverse_over_f2 = match invert_embedding(&f2, &gc2.basis()[0]) {
        Ok(_) => "defined".to_string(),
        Err(e) => e.name().to_string(),
    };
    Ok(Report::new()
        .field("anchor", "dual-numbers example")
        .merge(header(&a).value())
        .field("centre_dim", z.dim())
        .field("super_centre_dim", sz.dim())
        .field("anti_centre_dim", az.dim())
        .field("ghost_dim", gh.dim())
        .field("g_centre_dim", gc.dim())
        .field("bigraded", &bigraded)
        .field("extended_centre_dim", ext.dim())
        .field("embedding", &emb)
        .field("inverse_over_f2", &inverse_over_f2)
        .check("centre_dim_2", z.dim() == 2)
        .check("super_centre_dim_2", sz.dim() == 2)
        .check("anti_centre_dim_1", az.dim() == 1)
        .check("ghost_is_whole_algebra", gh.dim() == a.dim())
        .check("g_centre_dim_3", gc.dim() == 3)
        .check("bigraded_slots", slots_ok)
        .check("extended_centre_dim_3", ext.dim() == 3)
        .check("embedding_bijective", emb.bijective && emb.holds())
        .check("inverse_fails_over_f2", inverse_over_f2 == "CharacteristicDividesOrder"))
}
