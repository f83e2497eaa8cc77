fn main() {
    println!("diracstar");
}
