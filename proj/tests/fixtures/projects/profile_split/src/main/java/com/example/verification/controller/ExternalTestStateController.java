package com.example.verification.controller;

import com.example.verification.model.RegistrationToken;
import com.example.verification.model.TestResult;
import org.springframework.context.annotation.Profile;
import org.springframework.http.ResponseEntity;
import org.springframework.web.bind.annotation.*;

@Profile("external")
@RestController
@RequestMapping(VerificationApi.VERSION_V1)
public class ExternalTestStateController {

    @PostMapping(value = VerificationApi.TESTRESULT_ROUTE)
    public ResponseEntity<TestResult> result(@RequestBody RegistrationToken token) {
        TestResult result = new TestResult();
        return ResponseEntity.ok(result);
    }

    @GetMapping("/status")
    public String status(@RequestHeader("X-Request-Padding") String padding) {
        return "ok";
    }
}
