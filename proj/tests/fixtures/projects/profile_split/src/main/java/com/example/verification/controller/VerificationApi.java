package com.example.verification.controller;

public interface VerificationApi {
    String VERSION_V1 = "/version/v1";
    String TESTRESULT_ROUTE = "/testresult";
    String TAN_ROUTE = "/tan";
}
