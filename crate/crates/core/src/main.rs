fn main() {
    println!("serkit");
}
