fn main() {
    // System OpenBLAS provides BLAS, CBLAS and LAPACK symbols in one library.
    println!("cargo:rustc-link-lib=dylib=openblas");
}
