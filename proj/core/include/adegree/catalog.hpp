#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adegree/padiccert.hpp"
#include "adegree/projmap.hpp"

namespace adegree {

/// A worked example with its exact expectations: closed-form degree law,
/// dynamical degree, and stability verdict.
struct PaperExample {
    std::string name;
    RationalMap map;
    double expected_delta;
    std::string delta_description;
    std::function<Int(int)> degree_law; // n -> deg(f^n)
    std::string degree_law_description;
    bool expected_stable;
    std::vector<std::string> notes;
};

std::vector<std::string> example_names();
PaperExample example(const std::string& name,
                     const std::map<std::string, Rat>& params = {});

/// One row of the classification of dominant quadratic planar maps.
struct GuedjCase {
    std::string case_id;
    std::map<std::string, Rat> parameters;
    RationalMap map = RationalMap::identity(3);
    double expected_delta;
    std::string delta_description;
    bool expected_stable;
    std::string formula;   // human-readable family formula
    std::string condition; // parameter condition from the classification
    bool representative = false; // families given only by degree conditions
};

std::vector<std::string> guedj_case_ids();
GuedjCase guedj(const std::string& case_id, const std::map<std::string, Rat>& params = {});

struct CaseCheck {
    std::string name;
    bool pass;
    std::string detail;
};

struct CaseReport {
    GuedjCase item;
    std::vector<CaseCheck> checks;
    DegreeSequence degrees;
    DeltaEstimate delta;
    bool pass = true;

    void add(std::string name, bool ok, std::string detail);
};

/// Runs the degree sequence, delta estimate, stability verdict, and (for the
/// Fibonacci / square-root rows) the p-adic growth-law certificates.
CaseReport verify_case(const GuedjCase& item, int max_n = 0, double tolerance = 1e-2);

} // namespace adegree
