#pragma once

#include "param.hpp"
#include "taylor.hpp"
#include "classical.hpp"
#include "quadrature.hpp"
#include "roots.hpp"
#include "sigma.hpp"
#include "kzeta.hpp"
#include "special.hpp"
#include "series.hpp"
#include "identities.hpp"
