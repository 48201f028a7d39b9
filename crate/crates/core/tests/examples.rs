macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(count_colored, "count_colored.rs");
example!(weighted_compositions, "weighted_compositions.rs");
example!(rank_unrank, "rank_unrank.rs");
example!(binary_map, "binary_map.rs");
example!(family_bijections, "family_bijections.rs");
example!(enumerate_families, "enumerate_families.rs");
example!(verify_identities, "verify_identities.rs");

#[test]
fn count_colored_runs() {
    count_colored::run_example().expect("count_colored example should run");
}

#[test]
fn weighted_compositions_runs() {
    weighted_compositions::run_example().expect("weighted_compositions example should run");
}

#[test]
fn rank_unrank_runs() {
    rank_unrank::run_example().expect("rank_unrank example should run");
}

#[test]
fn binary_map_runs() {
    binary_map::run_example().expect("binary_map example should run");
}

#[test]
fn family_bijections_runs() {
    family_bijections::run_example().expect("family_bijections example should run");
}

#[test]
fn enumerate_families_runs() {
    enumerate_families::run_example().expect("enumerate_families example should run");
}

#[test]
fn verify_identities_runs() {
    verify_identities::run_example().expect("verify_identities example should run");
}
