#ifndef ROTLAT_ROTLAT_HPP_
#define ROTLAT_ROTLAT_HPP_

#include "bits.hpp"
#include "congruence.hpp"
#include "corpus.hpp"
#include "error.hpp"
#include "free.hpp"
#include "iso.hpp"
#include "lattice.hpp"
#include "poset.hpp"
#include "poset_enum.hpp"
#include "rotational.hpp"
#include "varieties.hpp"
#include "verify.hpp"

#endif  // ROTLAT_ROTLAT_HPP_
