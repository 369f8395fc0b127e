#pragma once

// everything in one include
#include "ncalg/acceptance.hpp"
#include "ncalg/embeddings.hpp"
#include "ncalg/numerics.hpp"
#include "ncalg/parser.hpp"
#include "ncalg/random.hpp"
#include "ncalg/structure.hpp"
