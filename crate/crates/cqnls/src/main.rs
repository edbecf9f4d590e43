fn main() {
    println!("cqnls");
}
