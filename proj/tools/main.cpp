/**
 * Command-line front end.
 *
 *   curv        curvature of one cyclic word
 *   validate    check a shelling file against the shelling rules
 *   cochain     curvature of every oriented 2-simplex of a shelling file
 *   chern       Chern number of a closed oriented surface shelling
 *   product     shelling of the trivial bundle over a complex file
 *   extract     shelling read off a fibration file
 *   crosscheck  seeded randomized property suite
 *
 * Results go to stdout, diagnostics to stderr. Exit codes: 0 success,
 * 1 semantic or property failure, 2 usage or parse failure.
 */
#include <algorithm>
#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chern/io.hpp"
#include "chern/sections.hpp"
#include "chern/shelling.hpp"
#include "chern/word_gen.hpp"
#include "chern/words.hpp"

namespace {

using namespace chern;

// "a b c" splits on whitespace; "abc" splits per character.
std::vector<Letter> split_letters(const std::string& text) {
    std::vector<Letter> out;
    if (text.find_first_of(" \t") != std::string::npos) {
        std::istringstream in(text);
        std::string name;
        while (in >> name)
            out.emplace_back(name);
    } else {
        for (char c : text)
            out.emplace_back(std::string(1, c));
    }
    return out;
}

CyclicAlphabet3 parse_alphabet(const std::string& text) {
    const std::vector<Letter> letters = split_letters(text);
    if (letters.size() != 3)
        throw std::invalid_argument("alphabet must list exactly 3 letters, got " +
                                    std::to_string(letters.size()));
    return CyclicAlphabet3(letters[0], letters[1], letters[2]);
}

std::string tuple_str(const std::vector<Letter>& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (i > 0)
            out += ' ';
        out += vs[i].name();
    }
    return out;
}

int run_curv(const std::string& word_text, const std::string& alphabet_text,
             const std::string& method) {
    const CyclicWord word(split_letters(word_text));
    const CyclicAlphabet3 alphabet = parse_alphabet(alphabet_text);
    if (method == "mnev") {
        std::cout << curv_mnev(word, alphabet).str() << "\n";
    } else if (method == "triangles") {
        std::cout << curv_triangles(word, alphabet).str() << "\n";
    } else if (method == "sections") {
        std::cout << curv_by_sections(word, alphabet).str() << "\n";
    } else { // all
        const Rational mnev = curv_mnev(word, alphabet);
        const Rational triangles = curv_triangles(word, alphabet);
        const Rational sections = curv_by_sections(word, alphabet);
        std::cout << "mnev: " << mnev.str() << "\n"
                  << "triangles: " << triangles.str() << "\n"
                  << "sections: " << sections.str() << "\n";
        if (mnev != triangles || mnev != sections) {
            std::cerr << "methods disagree on word " << word.str() << "\n";
            return 1;
        }
    }
    return 0;
}

int run_validate(const std::string& path) {
    const ShellingFile file = read_shelling_file(path);
    const ValidationReport report = validate_shelling(file.shelling);
    std::cout << report.str() << "\n";
    return report.pass() ? 0 : 1;
}

int run_cochain(const std::string& path) {
    const ShellingFile file = read_shelling_file(path);
    const CurvatureCochain cochain = curvature_cochain(file.shelling, file.listed_triangles());
    for (const auto& [support, entry] : cochain.entries())
        std::cout << tuple_str(entry.simplex.vertices()) << " -> " << entry.value.str() << "\n";
    return 0;
}

int run_chern(const std::string& path) {
    const ShellingFile file = read_shelling_file(path);
    std::cout << chern_number(file.shelling, file.listed_triangles()).str() << "\n";
    return 0;
}

void emit_shelling(const Shelling& shelling, const std::vector<OrientedSimplex>& orientations,
                   const std::string& out_path) {
    if (out_path.empty())
        std::cout << render_shelling(shelling, orientations);
    else
        write_shelling_file(out_path, shelling, orientations);
}

int run_product(const std::string& path, std::int64_t r, const std::string& order_text,
                const std::string& out_path) {
    const ComplexFile file = read_complex_file(path);
    const std::vector<Letter> order =
        order_text.empty() ? std::vector<Letter>{} : split_letters(order_text);
    const Shelling shelling = product_shelling(file.complex, r, order);
    emit_shelling(shelling, file.listed, out_path);
    return 0;
}

int run_extract(const std::string& path, const std::string& out_path) {
    const FibrationDescription fibration = read_fibration_file(path);
    emit_shelling(extract_shelling(fibration), {}, out_path);
    return 0;
}

int run_crosscheck(std::int64_t count, std::int64_t max_len, std::uint64_t seed,
                   std::int64_t min_count) {
    const std::vector<Letter> abc = {Letter("a"), Letter("b"), Letter("c")};
    const std::vector<Letter> abcd = {Letter("a"), Letter("b"), Letter("c"), Letter("d")};
    const CyclicAlphabet3 alphabet(abc[0], abc[1], abc[2]);
    WordGenerator gen(seed);

    for (std::int64_t i = 0; i < count; ++i) {
        const CyclicWord word = gen.next(abc, 6, static_cast<std::size_t>(max_len), min_count);
        const Rational reference = curv_triangles(word, alphabet);
        if (curv_mnev(word, alphabet) != reference || curv_by_sections(word, alphabet) != reference) {
            std::cerr << "method disagreement on word " << word.str() << "\n";
            return 1;
        }
        for (std::size_t start = 1; start < word.length(); ++start) {
            if (curv_mnev(word, alphabet, start) != reference ||
                curv_triangles(CyclicWord(word.rotated(start)), alphabet) != reference) {
                std::cerr << "rotation changes curvature of word " << word.str() << " at slot "
                          << start << "\n";
                return 1;
            }
        }
        if (curv_triangles(word, alphabet.reversed()) != -reference) {
            std::cerr << "orientation reversal is not a sign flip on word " << word.str() << "\n";
            return 1;
        }

        const std::size_t four_len = std::max<std::size_t>(static_cast<std::size_t>(max_len), 8);
        const CyclicWord word4 = gen.next(abcd, 8, four_len, min_count);
        const Shelling shelling = single_simplex_shelling(abcd, word4);
        if (coboundary_on_3simplex(shelling, OrientedSimplex(abcd)) != Rational(0)) {
            std::cerr << "nonzero coboundary on word " << word4.str() << "\n";
            return 1;
        }
    }
    std::cout << count << "/" << count << " OK\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact curvature and Chern numbers of simplicial circle bundles"};
    app.require_subcommand(1);

    std::string word_text, alphabet_text, method = "triangles";
    CLI::App* curv = app.add_subcommand("curv", "Curvature of a cyclic word");
    curv->add_option("word", word_text, "word, e.g. bcabbccacb or 'b c a ...'")->required();
    curv->add_option("alphabet", alphabet_text, "3 letters in cyclic order, e.g. abc")->required();
    curv->add_option("--method", method, "computation route")
        ->check(CLI::IsMember({"mnev", "triangles", "sections", "all"}))
        ->capture_default_str();

    std::string file_path;
    CLI::App* validate = app.add_subcommand("validate", "Check a shelling file");
    validate->add_option("file", file_path, "shelling file")->required();
    CLI::App* cochain = app.add_subcommand("cochain", "Curvature of every 2-simplex");
    cochain->add_option("file", file_path, "shelling file")->required();
    CLI::App* chern_cmd = app.add_subcommand("chern", "Chern number of a closed oriented surface");
    chern_cmd->add_option("file", file_path, "shelling file")->required();

    std::int64_t r = 0;
    std::string order_text, out_path;
    CLI::App* product = app.add_subcommand("product", "Shelling of the trivial bundle base x S1");
    product->add_option("base", file_path, "complex file")->required();
    product->add_option("r", r, "fiber vertex count (>= 2)")->required();
    product->add_option("--vertex-order", order_text, "total order on the base vertices");
    product->add_option("-o,--output", out_path, "write here instead of stdout");

    CLI::App* extract = app.add_subcommand("extract", "Shelling of a simplicial fibration");
    extract->add_option("fibration", file_path, "fibration file")->required();
    extract->add_option("-o,--output", out_path, "write here instead of stdout");

    std::int64_t count = 0, max_len = 12, min_count = 2;
    std::uint64_t seed = 0;
    CLI::App* crosscheck = app.add_subcommand("crosscheck", "Randomized property suite");
    crosscheck->add_option("count", count, "number of trials")
        ->required()
        ->check(CLI::NonNegativeNumber);
    crosscheck->add_option("max_len", max_len, "maximum word length (>= 6)")
        ->required()
        ->check(CLI::Range(std::int64_t(6), std::int64_t(1) << 20));
    crosscheck->add_option("seed", seed, "PRNG seed")->required();
    crosscheck->add_option("--min-count", min_count, "minimum occurrences per letter")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2; // normalize CLI11's parse-error codes
    }

    try {
        if (curv->parsed())
            return run_curv(word_text, alphabet_text, method);
        if (validate->parsed())
            return run_validate(file_path);
        if (cochain->parsed())
            return run_cochain(file_path);
        if (chern_cmd->parsed())
            return run_chern(file_path);
        if (product->parsed())
            return run_product(file_path, r, order_text, out_path);
        if (extract->parsed())
            return run_extract(file_path, out_path);
        if (crosscheck->parsed())
            return run_crosscheck(count, max_len, seed, min_count);
    } catch (const FormatError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const EmptyWordError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const MissingLetterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ForeignLetterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateTripleError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const FiberTooShortError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2; // unreachable with require_subcommand(1)
}
