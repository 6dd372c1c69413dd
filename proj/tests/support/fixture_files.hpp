#pragma once

#include <string>

#include "excol/model/document.hpp"

#ifndef EXCOL_FIXTURE_DIR
#error "EXCOL_FIXTURE_DIR must point at the shipped fixtures"
#endif

// Loads a shipped fixture document, so tests exercise the files users run.
inline excol::model::CollectionSpec load_fixture(const std::string& name) {
  return excol::model::load_file(std::string(EXCOL_FIXTURE_DIR) + "/" + name + ".json");
}
