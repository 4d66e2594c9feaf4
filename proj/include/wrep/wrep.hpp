#ifndef WREP_WREP_HPP
#define WREP_WREP_HPP

#include "wrep/bases.hpp"
#include "wrep/classify.hpp"
#include "wrep/crystal.hpp"
#include "wrep/gtchar.hpp"
#include "wrep/io.hpp"
#include "wrep/kl.hpp"
#include "wrep/matrix.hpp"
#include "wrep/perm.hpp"
#include "wrep/poly.hpp"
#include "wrep/pyramid.hpp"
#include "wrep/rational.hpp"
#include "wrep/tableau.hpp"
#include "wrep/yangian2.hpp"

#endif // WREP_WREP_HPP
