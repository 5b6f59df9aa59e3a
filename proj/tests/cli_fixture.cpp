// Writes morphism files for the command-line tests: solved, shifted by a
// nontrivial cocycle at order 2, and shifted by an exact one.
#include <iostream>

#include "swmap/io.hpp"

using namespace swmap;

int main(int argc, char** argv)
{
    if (argc != 2) {
        std::cerr << "usage: cli_fixture DIR\n";
        return 2;
    }
    std::string dir = argv[1];
    int n = 2;
    MorphismSettings s{n, Deformation::zero(n), Deformation::symbolic(n, 0), 2, 2};
    Morphism f = solve_recursion(s);
    MultiIndex z0(n), e1 = MultiIndex::unit(n, 0), e2 = MultiIndex::unit(n, 1);
    TensorSymbol z(n, 2);
    z.add_term(SymbolTerm{z0, 1, {SlotIndex{e2, 1}, SlotIndex{e2, 1}}}, ThetaScalar(1));
    z.add_term(SymbolTerm{z0, 1, {SlotIndex{e2, 1}, SlotIndex{e1, 2}}}, ThetaScalar(-1));
    z.add_term(SymbolTerm{z0, 1, {SlotIndex{e1, 2}, SlotIndex{e2, 1}}}, ThetaScalar(-1));
    z.add_term(SymbolTerm{z0, 1, {SlotIndex{e1, 2}, SlotIndex{e1, 2}}}, ThetaScalar(1));
    TensorSymbol c(n, 2);
    c.add_term(SymbolTerm{e1, 0, {SlotIndex{e2, 1}, SlotIndex{z0, 2}}}, ThetaScalar(1));
    io::write_file(dir + "/solved.json", io::dump(io::morphism_to_json(f)));
    io::write_file(dir + "/shifted.json",
                   io::dump(io::morphism_to_json(shift_by_cocycle(f, make_cocycle(2, z, TensorSymbol(n, 2))))));
    io::write_file(dir + "/exact.json",
                   io::dump(io::morphism_to_json(shift_by_cocycle(f, make_cocycle(2, TensorSymbol(n, 2), c)))));
    MorphismSettings s3 = s;
    s3.n = 3;
    s3.theta = Deformation::zero(3);
    s3.theta_prime = Deformation::symbolic(3, 0);
    s3.L = 1;
    io::write_file(dir + "/three.json", io::dump(io::morphism_to_json(solve_recursion(s3))));
    return 0;
}
