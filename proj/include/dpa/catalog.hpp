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

#include "dpa/specfile.hpp"

namespace dpa {

struct CatalogEntry {
    std::string key;
    std::string text; // spec document
};

const std::vector<CatalogEntry>& catalog_entries();
const CatalogEntry* catalog_find(const std::string& key);

struct VerifyItem {
    std::string key;
    std::string what;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyItem> items;
    bool all_pass = true;
};

/// Runs every catalog expectation; deterministic order and output.
VerifyReport verify_catalog(const std::vector<std::string>& only_keys = {});

} // namespace dpa
