// Umbrella header.
#pragma once

#include "tomofix/arrays.hpp"
#include "tomofix/balanced.hpp"
#include "tomofix/bounded.hpp"
#include "tomofix/cyclotomic.hpp"
#include "tomofix/grid_text.hpp"
#include "tomofix/lattice.hpp"
#include "tomofix/laurent.hpp"
#include "tomofix/linalg.hpp"
#include "tomofix/modp.hpp"
#include "tomofix/polygrowth.hpp"
#include "tomofix/reproduce.hpp"
#include "tomofix/rings.hpp"
#include "tomofix/selfcheck.hpp"
#include "tomofix/serialize.hpp"
#include "tomofix/zero_locus.hpp"
