#pragma once

// Acceptance criteria as runnable checks. Each returns a verdict, a one-line
// summary and its running time; a criterion passes only within its time budget.

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace criteria
{

struct Setup
{
    std::filesystem::path demo; // the shipped demo workspace
    std::filesystem::path cli;  // the placidus executable
    std::uint64_t seed = 20261016;
};

struct Result
{
    int id = 0;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0;
    double budget = 0;
};

Result xor_example( const Setup& setup );
Result infusion_configurations( const Setup& setup );
Result lift_soundness( const Setup& setup );
Result deductive_of_var_proof( const Setup& setup );
Result construction_completeness( const Setup& setup );
Result family_model_checking( const Setup& setup );
Result product_model_checking( const Setup& setup );
Result case_study( const Setup& setup );

// "PASS [n] title: detail (1.23 s)"
void print( const Result& result );

// Setup from PLACIDUS_DEMO_DIR / PLACIDUS_CLI (compile-time defaults) and an
// optional --seed=N argument.
Setup setup_from( int argc, char** argv );

} // namespace criteria
