// aseries — arithmetic-series representations of positive integers.
//
// Subcommands: repr, classify, table, appendix, verify.
// Exit status: 0 on success (and certified verification), 1 when
// verification finds mismatches, 2 on usage errors.
#include <cstdint>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "aseries/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arithmetic-series representations of positive integers"};
    app.require_subcommand(1);

    std::string format_name = "text";
    const auto add_format = [&format_name](CLI::App* sub) {
        sub->add_option("--format", format_name, "output format")
            ->check(CLI::IsMember({"text", "csv", "json"}))
            ->capture_default_str();
    };

    std::uint64_t repr_n = 0;
    int repr_step = 0;
    auto* repr = app.add_subcommand("repr", "all representations of N");
    repr->add_option("N", repr_n, "integer to represent")->required();
    repr->add_option("--step", repr_step, "restrict to common difference 1 or 2")
        ->check(CLI::IsMember({1, 2}));
    add_format(repr);

    std::uint64_t classify_n = 0;
    auto* classify = app.add_subcommand("classify", "classification of N");
    classify->add_option("N", classify_n, "integer to classify")->required();
    add_format(classify);

    int table_id = 0;
    auto* table = app.add_subcommand("table", "regenerate a reference table");
    table->add_option("ID", table_id, "table id")->required();
    add_format(table);

    std::uint64_t appendix_max = 100;
    auto* appendix = app.add_subcommand("appendix", "classified representations for n = 3..max");
    appendix->add_option("--max", appendix_max, "upper bound")->capture_default_str();
    add_format(appendix);

    std::uint64_t verify_from = 0, verify_to = 0;
    auto* verify = app.add_subcommand("verify", "cross-check generators against brute force");
    verify->add_option("--from", verify_from, "range start")->required();
    verify->add_option("--to", verify_to, "range end")->required();
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        const aseries::Format format = aseries::parse_format(format_name);
        if (repr->parsed()) {
            std::optional<int> step;
            if (repr->count("--step") > 0) step = repr_step;
            std::cout << aseries::cmd_repr(repr_n, step, format);
        } else if (classify->parsed()) {
            std::cout << aseries::cmd_classify(classify_n, format);
        } else if (table->parsed()) {
            std::cout << aseries::cmd_table(table_id, format);
        } else if (appendix->parsed()) {
            std::cout << aseries::cmd_appendix(appendix_max, format);
        } else if (verify->parsed()) {
            const auto result = aseries::cmd_verify(verify_from, verify_to, format);
            std::cout << result.output;
            return result.certified ? kExitOk : kExitMismatch;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitMismatch;
    }
    return kExitOk;
}
