fn main() {
    println!("centralizer-lab");
}
