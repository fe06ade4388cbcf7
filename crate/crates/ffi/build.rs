#[cfg(feature = "headers")]
fn generate_header() {
    let dir = std::env::var("CARGO_MANIFEST_DIR").expect("CARGO_MANIFEST_DIR is set by cargo");
    cbindgen::Builder::new()
        .with_crate(&dir)
        .with_config(cbindgen::Config::from_file(format!("{dir}/cbindgen.toml")).expect("cbindgen.toml"))
        .generate()
        .expect("could not generate C header")
        .write_to_file(format!("{dir}/include/tgcolor.h"));
}

fn main() {
    println!("cargo:rerun-if-changed=src/lib.rs");
    println!("cargo:rerun-if-changed=cbindgen.toml");
    #[cfg(feature = "headers")]
    generate_header();
}
