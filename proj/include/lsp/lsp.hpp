#pragma once

#include "lsp/error.hpp"
#include "lsp/checked.hpp"
#include "lsp/rational.hpp"
#include "lsp/weight.hpp"
#include "lsp/root_system.hpp"
#include "lsp/character.hpp"
#include "lsp/bruhat.hpp"
#include "lsp/ls_path.hpp"
#include "lsp/smt.hpp"
#include "lsp/a2/poly.hpp"
#include "lsp/a2/dual_basis.hpp"
