/*
   Copyright 2026 The dpa authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
*/
#pragma once

#include <stdexcept>
#include <string>

namespace dpa {

enum class ErrKind {
    NotIrreducible,
    ExtensionRequired,
    NotFiniteWithinBound,
    DoesNotPreserveIdeal,
    WeightMismatch,
    ScalarCocycleObstruction,
    UnsupportedMapShape,
    TruncationInsufficient,
    DepthCap,
    DegreeCap,
    FamilyNotFinite,
    HypothesisMissing,
    Undecided,
    Parse,
    Internal,
};

/// All recoverable failures carry a kind plus a payload string (for
/// ExtensionRequired the payload is the offending irreducible factor).
class Error : public std::runtime_error {
  public:
    Error(ErrKind k, std::string detail)
        : std::runtime_error(name(k) + ": " + detail), kind_(k), detail_(std::move(detail)) {}

    ErrKind kind() const { return kind_; }
    const std::string& detail() const { return detail_; }

    static std::string name(ErrKind k) {
        switch (k) {
        case ErrKind::NotIrreducible: return "NotIrreducible";
        case ErrKind::ExtensionRequired: return "ExtensionRequired";
        case ErrKind::NotFiniteWithinBound: return "NotFiniteWithinBound";
        case ErrKind::DoesNotPreserveIdeal: return "DoesNotPreserveIdeal";
        case ErrKind::WeightMismatch: return "WeightMismatch";
        case ErrKind::ScalarCocycleObstruction: return "ScalarCocycleObstruction";
        case ErrKind::UnsupportedMapShape: return "UnsupportedMapShape";
        case ErrKind::TruncationInsufficient: return "TruncationInsufficient";
        case ErrKind::DepthCap: return "DepthCap";
        case ErrKind::DegreeCap: return "DegreeCap";
        case ErrKind::FamilyNotFinite: return "FamilyNotFinite";
        case ErrKind::HypothesisMissing: return "HypothesisMissing";
        case ErrKind::Undecided: return "Undecided";
        case ErrKind::Parse: return "Parse";
        case ErrKind::Internal: return "Internal";
        }
        return "Unknown";
    }

  private:
    ErrKind kind_;
    std::string detail_;
};

} // namespace dpa
