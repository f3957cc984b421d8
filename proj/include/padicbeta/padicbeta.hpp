#pragma once

#include "padicbeta/classical/beta_decomposition.hpp"
#include "padicbeta/classical/hurwitz.hpp"
#include "padicbeta/classical/recognize.hpp"
#include "padicbeta/classical/stark.hpp"
#include "padicbeta/cyclotomic/cyclotomic.hpp"
#include "padicbeta/gamma/beta.hpp"
#include "padicbeta/gamma/frobenius.hpp"
#include "padicbeta/gamma/jacobi.hpp"
#include "padicbeta/gamma/lgamma.hpp"
#include "padicbeta/reciprocity/checks.hpp"
#include "padicbeta/reciprocity/unramified.hpp"
