#pragma once

#include "audit.hpp"
#include "bigint.hpp"
#include "classify.hpp"
#include "divisors.hpp"
#include "enumerate.hpp"
#include "errors.hpp"
#include "factorization.hpp"
#include "primality.hpp"
#include "quaternion.hpp"
#include "rational.hpp"
#include "records.hpp"
#include "report.hpp"
#include "seeds.hpp"
#include "sieve.hpp"
#include "sigma_general.hpp"
#include "theorems.hpp"
