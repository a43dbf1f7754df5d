#pragma once

#include <ngw/bounds.hpp>
#include <ngw/canonical.hpp>
#include <ngw/certificate.hpp>
#include <ngw/certify.hpp>
#include <ngw/constructions.hpp>
#include <ngw/decomposition.hpp>
#include <ngw/embedding.hpp>
#include <ngw/errors.hpp>
#include <ngw/graph.hpp>
#include <ngw/graph6.hpp>
#include <ngw/ng_search.hpp>
#include <ngw/params.hpp>
#include <ngw/report.hpp>
#include <ngw/solve.hpp>
#include <ngw/solver_cache.hpp>
#include <ngw/verify.hpp>
