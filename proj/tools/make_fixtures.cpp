// Writes the shipped Hopf algebra files and the sample object files.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

#include "ydlab/compat.hpp"
#include "ydlab/decomp.hpp"
#include "ydlab/rep/io.hpp"

namespace fs = std::filesystem;
using namespace ydlab;
using Gf = PrimeField;

namespace {

void write(const fs::path& path, const Json& doc) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << doc.dump(2) << '\n';
    std::cout << path.string() << '\n';
}

void write_object(const fs::path& dir, const std::string& name, const std::string& hopf, const Object<Gf>& m) {
    write(dir / (name + ".obj"), to_json(m, Json(hopf)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Generate fixture files", "make_fixtures"};
    std::string out_dir = "fixtures";
    app.add_option("dir", out_dir, "Output directory");
    CLI11_PARSE(app, argc, argv);

    try {
        const fs::path dir(out_dir), objects = dir / "objects";
        fs::create_directories(objects);
        for (const auto& name : fixture_names())
            std::visit([&](const auto& h) { write(dir / (name + ".hopf"), to_json(*h)); }, *builtin_fixture(name));

        const Gf k2(2);
        auto c2 = fixture<Gf>("gf2_c2");
        // swaps the basis vectors but keeps them in different degrees
        write_object(objects, "gf2_c2_bad", "gf2_c2",
                     Object<Gf>(ModuleStructure<Gf>(c2, 2, {Matrix<Gf>::identity(k2, 2), Matrix<Gf>::from_ints(k2, {{0, 1}, {1, 0}})}),
                                ComoduleStructure<Gf>(c2, 2, {Matrix<Gf>::from_ints(k2, {{1, 0}, {0, 0}}),
                                                              Matrix<Gf>::from_ints(k2, {{0, 0}, {0, 1}})}),
                                Kind::YD));
        write_object(objects, "gf2_c2_jordan", "gf2_c2",
                     Object<Gf>(ModuleStructure<Gf>(c2, 2, {Matrix<Gf>::identity(k2, 2), Matrix<Gf>::from_ints(k2, {{1, 1}, {0, 1}})}),
                                ComoduleStructure<Gf>::trivial(c2, 2), Kind::YD));

        auto c4 = fixture<Gf>("gf5_c4");
        auto chars = characters(*c4);
        auto gs = grouplikes(*c4);
        write_object(objects, "gf5_c4_one_1_2", "gf5_c4", one_dim_object(c4, chars[1], gs[2], Kind::YD));
        write_object(objects, "gf5_c4_one_3_1", "gf5_c4", one_dim_object(c4, chars[3], gs[1], Kind::YD));
        write_object(objects, "gf5_c4_free", "gf5_c4", free_yd(c4, ComoduleStructure<Gf>::trivial(c4, 1)));
        write_object(objects, "gf5_c4_free_g", "gf5_c4",
                     free_yd(c4, ComoduleStructure<Gf>::grouplike(c4, std::span<const Fp>(gs[1]))));

        auto s3 = fixture<Gf>("gf7_s3");
        write_object(objects, "gf7_s3_free_long", "gf7_s3", free_long(s3, ComoduleStructure<Gf>::trivial(s3, 1)));
        write_object(objects, "gf7_s3_trivial_yd", "gf7_s3", Object<Gf>::trivial(s3, 2, Kind::YD));

        auto h4 = fixture<Gf>("h4_gf5");
        write_object(objects, "h4_gf5_free", "h4_gf5", free_yd(h4, ComoduleStructure<Gf>::trivial(h4, 1)));
    } catch (const std::exception& e) {
        std::cerr << "make_fixtures: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
