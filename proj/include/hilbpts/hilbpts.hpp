#pragma once

#include "hilbpts/equivariant.hpp"
#include "hilbpts/fock.hpp"
#include "hilbpts/goettsche.hpp"
#include "hilbpts/incidence.hpp"
#include "hilbpts/intersection.hpp"
#include "hilbpts/monomial.hpp"
#include "hilbpts/partition.hpp"
#include "hilbpts/poincare.hpp"
